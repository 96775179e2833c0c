#pragma once

// Borel-Weil-Bott evaluation over the underlying flag manifold, the exact
// recursive base/fiber computation of the sheaf-family cohomology in degrees
// 0 and 1, and the end-to-end rigidity verdict.

#include "flagrig/sheaf_catalog.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace flagrig {

struct Constituent {
  Weight hw;    // dominant G-highest weight
  BigInt mult;
  BigInt dim;   // Weyl dimension
};

enum class TableMode { Exact, UpperBound };

struct CohomologyTable {
  std::vector<std::vector<Constituent>> degrees;
  std::vector<BigInt> totals;
  TableMode mode = TableMode::UpperBound;

  BigInt total(int d) const {
    return d < static_cast<int>(totals.size()) ? totals[d] : BigInt(0);
  }
};

// Semisimplify-and-evaluate: decompose c over the blocks of ft, classify
// each highest weight over the full root system of gl_m + gl_n.
// Mode is Exact only when the caller asserts complete reducibility.
CohomologyTable cohomology(const FlagType& ft, const Character& c,
                           bool assert_completely_reducible = false);

// Per-degree multiplicity of the trivial G-module.
std::vector<BigInt> invariant_dims(const CohomologyTable& table);

using AssumptionLog = std::set<std::string>;

struct FamilyResult {
  Range h0;
  Range h1;
};

// Exact degree-0/1 cohomology of a catalog sheaf over the flag manifold of
// ft, computed the way the source derivation does: direct BWB at r = 1,
// base/fiber recursion plus six-term chaining at r >= 2. Named facts
// consumed along the way are added to log (if non-null).
FamilyResult family_h01(const FlagType& ft, Family fam, int p, int q,
                        AssumptionLog* log);

// N_q * dim H0(fiber) — declared in flag_geometry.hpp, defined here because
// the fiber dimension comes from the recursive engine.

enum class Verdict { Rigid, NotProven, OutsideHypotheses };

std::string verdict_name(Verdict v);

struct CellKey {
  Family family;
  int p, q;
  bool operator<(const CellKey& o) const {
    if (family != o.family) return family < o.family;
    if (p != o.p) return p < o.p;
    return q < o.q;
  }
};

struct RigidityVerdict {
  ValidatedFlagType vft;
  std::map<CellKey, FamilyResult> cells;      // graded v/h cells (r >= 2 only)
  std::map<int, FamilyResult> graded_tangent; // p -> result for the graded piece
  Range h1_T2;
  Range h1_T;
  Verdict verdict = Verdict::NotProven;
  AssumptionLog assumption_log;
  std::vector<std::string> notes;
};

struct RigidityOptions {
  bool allow_nonadmissible = false;  // compute anyway, verdict capped
  int max_p = -1;                    // default: odd dimension
};

RigidityVerdict rigidity_report(const FlagType& ft,
                                const RigidityOptions& opt = {});

}  // namespace flagrig
