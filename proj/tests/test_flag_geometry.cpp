#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrig/flag_geometry.hpp"

using namespace flagrig;

namespace {

FlagType ft_desk() { return FlagType{5, 5, {5, 4, 2}, {5, 4, 2}}; }

}  // namespace

TEST_CASE("validation of the standing hypotheses") {
  CHECK(validate_flag_type(ft_desk()).admissible);
  CHECK(validate_flag_type(FlagType{4, 4, {4, 2}, {4, 2}}).admissible);
  CHECK(validate_flag_type(FlagType{6, 6, {6, 4, 2}, {6, 4, 2}}).admissible);

  ValidatedFlagType bad = validate_flag_type(FlagType{4, 4, {4, 3, 1}, {4, 3, 1}});
  CHECK(bad.generic);
  CHECK_FALSE(bad.admissible);

  ValidatedFlagType gr = validate_flag_type(FlagType{2, 2, {2, 1}, {2, 1}});
  CHECK(gr.generic);
  CHECK_FALSE(gr.admissible);

  CHECK_FALSE(validate_flag_type(FlagType{5, 5, {5, 2, 4}, {5, 4, 2}}).generic);
  CHECK_FALSE(validate_flag_type(FlagType{5, 5, {4, 2}, {5, 4}}).generic);

  // Purely even flags are well-formed but outside the super hypotheses.
  ValidatedFlagType even = validate_flag_type(FlagType{2, 0, {2, 1}, {0, 0}});
  CHECK(even.generic);
  CHECK_FALSE(even.admissible);
}

TEST_CASE("reductive block structure appends the trailing block") {
  BlockStructure bs = reductive_blocks(ft_desk());
  CHECK(bs.mu_blocks == std::vector<int>{1, 2, 2});
  CHECK(bs.lambda_blocks == std::vector<int>{1, 2, 2});
  CHECK(bs.mu_offset(1) == 1);
  CHECK(bs.lambda_offset(2) == 3);
}

TEST_CASE("named representation dimensions at the desk type") {
  FlagType ft = ft_desk();
  auto dim_of = [&](RepId id) { return dimension(named_rep(ft, id).character); };
  // phi: 2 * (m-k1) * sum of later lambda blocks and symmetrically = 2*(1*4).
  CHECK(dim_of(RepId::Phi) == 8);
  CHECK(dim_of(RepId::Psi) == 8);
  CHECK(dim_of(RepId::Theta) == 16);
  CHECK(odd_dimension(ft) == 16);
  // tau: sum over block pairs of mu_i*mu_j + la_i*la_j.
  CHECK(dim_of(RepId::Tau) == 16);
  CHECK(dim_of(RepId::TauV) == 8);
  CHECK(dim_of(RepId::TauH) == 8);
  CHECK(dimension(named_rep(ft, RepId::Tau).character) ==
        dimension(named_rep(ft, RepId::TauV).character) +
            dimension(named_rep(ft, RepId::TauH).character));
}

TEST_CASE("theta splits as phi plus psi") {
  FlagType ft = ft_desk();
  Character sum = direct_sum(named_rep(ft, RepId::Phi).character,
                             named_rep(ft, RepId::Psi).character);
  CHECK(sum == named_rep(ft, RepId::Theta).character);
}

TEST_CASE("base and fiber of the two-step split") {
  BaseFiberSplit sp = base_fiber_split(ft_desk());
  CHECK(sp.base == FlagType{5, 5, {5, 4}, {5, 4}});
  CHECK(sp.fiber == FlagType{4, 4, {4, 2}, {4, 2}});
  CHECK(validate_flag_type(sp.base).admissible);
  CHECK(validate_flag_type(sp.fiber).admissible);

  CHECK(dimension(sp.push.chi_A_m1) == 2 * 4 * 4);
  CHECK(dimension(sp.push.chi_A_0) == 2);
  // Traceless adjoints of the two rank-4 blocks: 2 * (16 - 1).
  CHECK(dimension(sp.push.chi_C_0) == 30);
  CHECK(dimension(sp.push.chi_T_0) == 32);
  CHECK(sp.push.chi_T_m1 == sp.push.chi_A_m1);
  CHECK(dimension(sp.push.phi_B) == 8);
}

TEST_CASE("base_fiber_split refuses one-step flags") {
  CHECK_THROWS_AS(base_fiber_split(FlagType{4, 4, {4, 2}, {4, 2}}),
                  FlagrigError);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::O, Family::Av, Family::Ah, Family::A, Family::Cv,
                   Family::Ch, Family::C, Family::Tv, Family::Th, Family::T}) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK_FALSE(family_from_name("Zv").has_value());
}

TEST_CASE("pushforward rank bookkeeping") {
  FlagType ft = ft_desk();
  // s = 0 tangent cell at q = 0: chi_T_0 alone.
  CHECK(pushforward_rank(ft, Family::Tv, 0, 0) == 32);
  // s = -1 at q = 1: wedge^1 phi_B (dim 8) times chi_A_m1 (dim 32).
  CHECK(pushforward_rank(ft, Family::Av, 0, 1) == 8 * 32);
  CHECK(pushforward_rank(ft, Family::Cv, 3, 1) == 0);
}
