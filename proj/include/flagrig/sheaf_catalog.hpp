#pragma once

// Fiber P-representations of the paper catalog's sheaf families, and the
// long-exact-sequence dimension calculus used to chain graded pieces.

#include "flagrig/flag_geometry.hpp"

#include <optional>

namespace flagrig {

struct SheafId {
  Family family = Family::O;
  int p = 0;
  int q = 0;  // ignored for ungraded families

  std::string to_string() const;
};

// O10 -> psi, O11 -> phi, Theta^v -> tau_v, Theta^h -> tau_h.
// Graded cells:
//   Av_pq = psi* (x) wedge^{p-q+1} psi (x) wedge^q phi
//   Ah_pq = phi* (x) wedge^{q+1} phi (x) wedge^{p-q} psi
//   Cv_pq = tau_v (x) wedge^q phi (x) wedge^{p-q} psi
//   Ch_pq = tau_h (x) wedge^q phi (x) wedge^{p-q} psi
//   Tv/Th = column sums Av+Cv / Ah+Ch; A/C/T = sums over q
//   O_p   = wedge^p theta;  A_p = theta* (x) wedge^{p+1} theta;
//   C_p   = tau (x) wedge^p theta
// Negative or overflowing wedge indices give the zero sheaf (empty character).
// v/h families require r >= 2 (the split is undefined at r = 1).
Character sheaf_rep(const FlagType& ft, const SheafId& id);

// Dimension range [lo, hi]; Exact when lo == hi.
struct Range {
  long long lo = 0;
  long long hi = 0;
  bool exact() const { return lo == hi; }
  bool is(long long v) const { return lo == v && hi == v; }
  static Range exactly(long long v) { return Range{v, v}; }
};

Range intersect(const Range& a, const Range& b);  // throws on empty result
Range range_add(const Range& a, const Range& b);

struct LesNode {
  Range h0;
  Range h1;
};

struct LesOptions {
  bool h2x_zero = false;          // treat H2(X) = 0
  bool connecting_zero = false;   // H0(Z) -> H1(X) is the zero map
  std::optional<Range> known_h0y; // external constraint on h0 of the middle
  std::optional<long long> forced_connecting_rank;  // dim im(H0(Z) -> H1(X))
};

// Middle object of 0 -> X -> Y -> Z -> 0 from the six-term sequence
// 0 -> H0X -> H0Y -> H0Z -> H1X -> H1Y -> H1Z -> H2X.
// Throws FlagrigError on inconsistent (empty) ranges.
LesNode les_middle(const LesNode& x, const LesNode& z,
                   const LesOptions& opt = {});

// Filtration fold: graded pieces ordered from the top of the filtration
// down; returns the node of the full object.
LesNode les_chain(const std::vector<LesNode>& graded_top_down);

}  // namespace flagrig
