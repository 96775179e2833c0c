#include "flagrig/sheaf_catalog.hpp"

#include <algorithm>
#include <sstream>

namespace flagrig {

namespace {

// wedge with the zero-sheaf conventions of the catalog.
Character wedge_of(const Character& c, int q, int m, int n) {
  if (q < 0) return {};
  if (q == 0) return trivial_character(m, n);
  if (c.empty()) return {};
  return wedge(c, q);
}

Character tensor3(const Character& a, const Character& b, const Character& c) {
  if (a.empty() || b.empty() || c.empty()) return {};
  return tensor(tensor(a, b), c);
}

}  // namespace

std::string SheafId::to_string() const {
  std::ostringstream os;
  os << family_name(family) << "_p" << p;
  if (family_is_graded_vh(family)) os << "q" << q;
  return os.str();
}

Character sheaf_rep(const FlagType& ft, const SheafId& id) {
  if (family_is_graded_vh(id.family) && ft.r() < 2)
    throw FlagrigError("v/h split undefined at r=1");
  int m = ft.m, n = ft.n;
  int p = id.p, q = id.q;
  auto rep = [&](RepId rid) { return named_rep(ft, rid).character; };
  switch (id.family) {
    case Family::O:
      return wedge_of(rep(RepId::Theta), p, m, n);
    case Family::A: {
      Character w = wedge_of(rep(RepId::Theta), p + 1, m, n);
      if (w.empty()) return {};
      return tensor(dual(rep(RepId::Theta)), w);
    }
    case Family::C: {
      Character w = wedge_of(rep(RepId::Theta), p, m, n);
      if (w.empty()) return {};
      return tensor(rep(RepId::Tau), w);
    }
    case Family::T:
      return direct_sum(sheaf_rep(ft, {Family::A, p, q}),
                        sheaf_rep(ft, {Family::C, p, q}));
    case Family::Av:
      return tensor3(dual(rep(RepId::Psi)),
                     wedge_of(rep(RepId::Psi), p - q + 1, m, n),
                     wedge_of(rep(RepId::Phi), q, m, n));
    case Family::Ah:
      return tensor3(dual(rep(RepId::Phi)),
                     wedge_of(rep(RepId::Phi), q + 1, m, n),
                     wedge_of(rep(RepId::Psi), p - q, m, n));
    case Family::Cv:
      return tensor3(rep(RepId::TauV), wedge_of(rep(RepId::Phi), q, m, n),
                     wedge_of(rep(RepId::Psi), p - q, m, n));
    case Family::Ch:
      return tensor3(rep(RepId::TauH), wedge_of(rep(RepId::Phi), q, m, n),
                     wedge_of(rep(RepId::Psi), p - q, m, n));
    case Family::Tv:
      return direct_sum(sheaf_rep(ft, {Family::Av, p, q}),
                        sheaf_rep(ft, {Family::Cv, p, q}));
    case Family::Th:
      return direct_sum(sheaf_rep(ft, {Family::Ah, p, q}),
                        sheaf_rep(ft, {Family::Ch, p, q}));
  }
  return {};
}

Range intersect(const Range& a, const Range& b) {
  Range r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.lo > r.hi)
    throw FlagrigError("les calculus: contradictory dimension ranges");
  return r;
}

Range range_add(const Range& a, const Range& b) {
  return Range{a.lo + b.lo, a.hi + b.hi};
}

LesNode les_middle(const LesNode& x, const LesNode& z, const LesOptions& opt) {
  // t = dim im(H0Z -> H1X), s = dim ker(H1Z -> H2X).
  Range t{0, std::min(z.h0.hi, x.h1.hi)};
  if (opt.connecting_zero) t = intersect(t, Range::exactly(0));
  if (opt.forced_connecting_rank)
    t = intersect(t, Range::exactly(*opt.forced_connecting_rank));
  if (opt.known_h0y) {
    // h0Y = h0X + h0Z - t
    Range from_known{x.h0.lo + z.h0.lo - opt.known_h0y->hi,
                     x.h0.hi + z.h0.hi - opt.known_h0y->lo};
    t = intersect(t, from_known);
  }
  Range s{opt.h2x_zero ? z.h1.lo : 0, z.h1.hi};

  LesNode y;
  y.h0 = Range{std::max(0ll, x.h0.lo + z.h0.lo - t.hi),
               x.h0.hi + z.h0.hi - t.lo};
  if (opt.known_h0y) y.h0 = intersect(y.h0, *opt.known_h0y);
  y.h1 = Range{std::max(0ll, x.h1.lo - t.hi + s.lo), x.h1.hi - t.lo + s.hi};
  if (y.h0.lo > y.h0.hi || y.h1.lo > y.h1.hi)
    throw FlagrigError("les calculus: contradictory dimension ranges");
  return y;
}

LesNode les_chain(const std::vector<LesNode>& graded_top_down) {
  if (graded_top_down.empty()) return LesNode{Range::exactly(0), Range::exactly(0)};
  LesNode acc = graded_top_down.front();
  for (std::size_t i = 1; i < graded_top_down.size(); ++i)
    acc = les_middle(acc, graded_top_down[i]);
  return acc;
}

}  // namespace flagrig
