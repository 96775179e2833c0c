#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrig/sheaf_catalog.hpp"

using namespace flagrig;

namespace {

FlagType ft_desk() { return FlagType{5, 5, {5, 4, 2}, {5, 4, 2}}; }

}  // namespace

TEST_CASE("catalog dimensions at the desk type") {
  FlagType ft = ft_desk();
  CHECK(dimension(sheaf_rep(ft, {Family::O, 0, 0})) == 1);
  CHECK(dimension(sheaf_rep(ft, {Family::O, 1, 0})) == 16);
  CHECK(dimension(sheaf_rep(ft, {Family::O, 17, 0})) == 0);
  // A_p = theta* (x) wedge^{p+1} theta.
  CHECK(dimension(sheaf_rep(ft, {Family::A, -1, 0})) == 16);
  CHECK(dimension(sheaf_rep(ft, {Family::A, 0, 0})) == 16 * 16);
  // T = A + C at every p.
  for (int p = -1; p <= 3; ++p) {
    CHECK(dimension(sheaf_rep(ft, {Family::T, p, 0})) ==
          dimension(sheaf_rep(ft, {Family::A, p, 0})) +
              dimension(sheaf_rep(ft, {Family::C, p, 0})));
  }
  // Tv/Th column sums.
  for (int p = 0; p <= 3; ++p)
    for (int q = -1; q <= p + 1; ++q) {
      CHECK(dimension(sheaf_rep(ft, {Family::Tv, p, q})) ==
            dimension(sheaf_rep(ft, {Family::Av, p, q})) +
                dimension(sheaf_rep(ft, {Family::Cv, p, q})));
      CHECK(dimension(sheaf_rep(ft, {Family::Th, p, q})) ==
            dimension(sheaf_rep(ft, {Family::Ah, p, q})) +
                dimension(sheaf_rep(ft, {Family::Ch, p, q})));
    }
}

TEST_CASE("zero-sheaf conventions") {
  FlagType ft = ft_desk();
  CHECK(sheaf_rep(ft, {Family::Av, 0, -1}).empty());
  CHECK(sheaf_rep(ft, {Family::C, -1, 0}).empty());
  CHECK(sheaf_rep(ft, {Family::Av, 3, 20}).empty());
}

TEST_CASE("v/h families are undefined on one-step flags") {
  FlagType gr{4, 4, {4, 2}, {4, 2}};
  CHECK_THROWS_WITH_AS(sheaf_rep(gr, {Family::Av, 0, 0}),
                       "v/h split undefined at r=1", FlagrigError);
}

TEST_CASE("range intersection and emptiness") {
  CHECK(intersect(Range{0, 5}, Range{3, 9}).lo == 3);
  CHECK(intersect(Range{0, 5}, Range{3, 9}).hi == 5);
  CHECK_THROWS_AS(intersect(Range{0, 1}, Range{2, 3}), FlagrigError);
  CHECK(Range::exactly(4).exact());
  CHECK(range_add(Range{1, 2}, Range{3, 4}).lo == 4);
}

TEST_CASE("six-term middle: exact flanks with vanishing h1 of the sub") {
  // 0 -> X -> Y -> Z -> 0 with h1X = 0 forces the connecting map to vanish.
  LesNode x{Range::exactly(3), Range::exactly(0)};
  LesNode z{Range::exactly(2), Range::exactly(5)};
  LesNode y = les_middle(x, z);
  CHECK(y.h0.is(5));
  CHECK(y.h1.lo == 0);
  CHECK(y.h1.hi == 5);
  LesNode y2 = les_middle(x, z, LesOptions{true, false, {}, {}});
  CHECK(y2.h1.is(5));  // h2X = 0 pins the tail
}

TEST_CASE("six-term middle honors the forced connecting rank") {
  LesNode x{Range::exactly(0), Range::exactly(1)};
  LesNode z{Range::exactly(50), Range::exactly(0)};
  LesOptions opt;
  opt.forced_connecting_rank = 1;
  LesNode y = les_middle(x, z, opt);
  CHECK(y.h0.is(49));
  CHECK(y.h1.is(0));
}

TEST_CASE("six-term middle with known middle sections pins the rank") {
  LesNode x{Range::exactly(0), Range::exactly(2)};
  LesNode z{Range::exactly(4), Range::exactly(0)};
  LesOptions opt;
  opt.known_h0y = Range::exactly(2);
  LesNode y = les_middle(x, z, opt);
  CHECK(y.h0.is(2));
  CHECK(y.h1.is(0));
}

TEST_CASE("six-term middle detects contradictions") {
  LesNode x{Range::exactly(0), Range::exactly(0)};
  LesNode z{Range::exactly(1), Range::exactly(0)};
  LesOptions opt;
  opt.known_h0y = Range::exactly(5);  // impossible: h0Y <= h0X + h0Z = 1
  CHECK_THROWS_AS(les_middle(x, z, opt), FlagrigError);
}

TEST_CASE("chain fold of exact pieces with vanishing h1 is additive") {
  std::vector<LesNode> pieces{{Range::exactly(1), Range::exactly(0)},
                              {Range::exactly(2), Range::exactly(0)},
                              {Range::exactly(3), Range::exactly(0)}};
  LesNode out = les_chain(pieces);
  CHECK(out.h0.is(6));
  CHECK(out.h1.is(0));
}
