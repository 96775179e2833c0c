#include "flagrig/bwb.hpp"

#include "flagrig/supercharts.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace flagrig {

namespace {

Character wedge_of(const Character& c, int q, int m, int n) {
  if (q < 0) return {};
  if (q == 0) return trivial_character(m, n);
  if (c.empty()) return {};
  return wedge(c, q);
}

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max())
    throw FlagrigError("dimension exceeds 64-bit range");
  return v.convert_to<long long>();
}

}  // namespace

CohomologyTable cohomology(const FlagType& ft, const Character& c,
                           bool assert_completely_reducible) {
  CohomologyTable table;
  table.mode =
      assert_completely_reducible ? TableMode::Exact : TableMode::UpperBound;
  if (c.empty()) return table;
  BlockStructure bs = reductive_blocks(ft);
  RootData rd = build_root_data(ft.m, ft.n);
  IrrDecomposition dec = decompose(bs, c);
  std::map<std::pair<int, Weight>, BigInt> cells;
  for (const auto& [hw, mult] : dec.constituents) {
    BottClass bc = classify(hw, rd);
    if (bc.kind == BottKind::Singular) continue;
    cells[{bc.index, bc.dot_image}] += mult;
  }
  for (const auto& [key, mult] : cells) {
    const auto& [d, hw] = key;
    if (d >= static_cast<int>(table.degrees.size())) {
      table.degrees.resize(d + 1);
      table.totals.resize(d + 1, BigInt(0));
    }
    BigInt dim = weyl_dim(hw, rd);
    table.degrees[d].push_back(Constituent{hw, mult, dim});
    table.totals[d] += mult * dim;
  }
  return table;
}

std::vector<BigInt> invariant_dims(const CohomologyTable& table) {
  std::vector<BigInt> out(table.degrees.size(), BigInt(0));
  for (std::size_t d = 0; d < table.degrees.size(); ++d)
    for (const Constituent& c : table.degrees[d])
      if (is_zero(c.hw)) out[d] += c.mult;
  return out;
}

namespace {

constexpr const char* kFactBaseExact =
    "one-step flags carry completely reducible isotropy representations; "
    "direct evaluation is exact there";
constexpr const char* kFactFiberVanishing =
    "cells whose fiber piece has vanishing cohomology in degrees 0 and 1 "
    "have vanishing direct images";
constexpr const char* kFactOffDiagonalH =
    "horizontal cells off the diagonal p = q acquire a positive fiber wedge "
    "degree and vanish";
constexpr const char* kFactTangentSurjects0 =
    "at filtration degree 0 the global fields surject onto the quotient "
    "family, so the connecting map vanishes";
constexpr const char* kFactOneStepDeg2 =
    "over a one-step flag the degree-2 tangent cohomology is one-dimensional";
constexpr const char* kFactCvS2H0 =
    "the s = 2 vertical cells have no sections (strictly negative fiber "
    "twist)";
constexpr const char* kFactCvS2Bound =
    "the semisimplified evaluation bounds the filtered cohomology from above";
constexpr const char* kFactTvFiberRecursion =
    "the s = 2 vertical tangent cell at q = 0 matches the degree-2 tangent "
    "cohomology of the fiber";
constexpr const char* kFactGlobalTangent =
    "every global even vector field is fundamental: sections of the full "
    "tangent sheaf have dimension m^2 + n^2";
constexpr const char* kFactOracle22 =
    "coordinate oracle: the invariant vertical cocycle family at the (2,2) "
    "cell vanishes, and its first cohomology embeds into the one-dimensional "
    "horizontal line";
constexpr const char* kFactNonSplit =
    "the supermanifold does not retract onto its bigraded model, so the "
    "degree-2 tangent cohomology is at least one-dimensional";
constexpr const char* kFactGradingField =
    "the image of the bottom connecting map is exactly the grading "
    "direction: its rank is one";

void log_fact(AssumptionLog* log, const char* fact) {
  if (log) log->insert(fact);
}

std::string memo_key(const FlagType& ft, Family fam, int p, int q) {
  std::ostringstream os;
  os << ft.to_string() << "#" << family_name(fam) << "#" << p << "#" << q;
  return os.str();
}

struct MemoEntry {
  FamilyResult result;
  AssumptionLog log;
};

FamilyResult exact_result(const CohomologyTable& t) {
  return FamilyResult{Range::exactly(to_ll(t.total(0))),
                      Range::exactly(to_ll(t.total(1)))};
}

FamilyResult zero_result() {
  return FamilyResult{Range::exactly(0), Range::exactly(0)};
}

LesNode node_of(const FamilyResult& r) { return LesNode{r.h0, r.h1}; }

FamilyResult res_of(const LesNode& n) { return FamilyResult{n.h0, n.h1}; }

FamilyResult family_h01_impl(const FlagType& ft, Family fam, int p, int q,
                             AssumptionLog* log);

FamilyResult family_cell(const FlagType& ft, Family fam, int p, int q,
                         AssumptionLog* log) {
  return family_h01(ft, fam, p, q, log);
}

// r = 1: direct evaluation, plus the six-term chaining for the tangent family.
FamilyResult family_one_step(const FlagType& ft, Family fam, int p,
                             AssumptionLog* log) {
  if (fam == Family::O || fam == Family::A || fam == Family::C) {
    log_fact(log, kFactBaseExact);
    return exact_result(cohomology(ft, sheaf_rep(ft, {fam, p, 0}), true));
  }
  // Tangent family: 0 -> A_p -> T_p -> C_p -> 0. The imported one-step
  // facts hold under the standing hypotheses only.
  const bool admissible = validate_flag_type(ft).admissible;
  FamilyResult x = family_cell(ft, Family::A, p, 0, log);
  FamilyResult z = family_cell(ft, Family::C, p, 0, log);
  LesOptions opt;
  if (p == 0 && admissible) {
    opt.connecting_zero = true;
    log_fact(log, kFactTangentSurjects0);
  }
  LesNode node = les_middle(node_of(x), node_of(z), opt);
  if (p == 2 && admissible) {
    node.h1 = intersect(node.h1, Range::exactly(1));
    log_fact(log, kFactOneStepDeg2);
  }
  return res_of(node);
}

// Exact evaluation over the one-step base of the split.
FamilyResult base_eval(const BaseFiberSplit& sp, const Character& c,
                       AssumptionLog* log) {
  log_fact(log, kFactBaseExact);
  return exact_result(cohomology(sp.base, c, true));
}

void require_fiber_vanishing(const FlagType& fiber, Family fam, int s,
                             AssumptionLog* log) {
  FamilyResult f = family_cell(fiber, fam, s, 0, log);
  if (!f.h0.is(0) || !f.h1.is(0)) {
    std::ostringstream os;
    os << "fiber piece " << family_name(fam) << "_" << s << " over "
       << fiber.to_string() << " does not vanish";
    throw FlagrigError(os.str());
  }
  log_fact(log, kFactFiberVanishing);
}

FamilyResult graded_cell_multi_step(const FlagType& ft, Family fam, int p,
                                    int q, AssumptionLog* log) {
  BaseFiberSplit sp = base_fiber_split(ft);
  const int s = p - q;
  const int m = ft.m, n = ft.n;

  // Horizontal cells live on the diagonal and push to the base families.
  if (fam == Family::Ah || fam == Family::Ch || fam == Family::Th) {
    if (p != q) {
      log_fact(log, kFactOffDiagonalH);
      return zero_result();
    }
    Family base_fam = fam == Family::Ah   ? Family::A
                      : fam == Family::Ch ? Family::C
                                          : Family::T;
    return family_cell(sp.base, base_fam, p, 0, log);
  }

  if (q < 0) return zero_result();
  Character wq = wedge_of(sp.push.phi_B, q, m, n);
  if (wq.empty()) return zero_result();

  if (fam == Family::Av) {
    if (s == -1) return base_eval(sp, tensor(wq, sp.push.chi_A_m1), log);
    if (s == 0) return base_eval(sp, tensor(wq, sp.push.chi_A_0), log);
    if (s >= 1) require_fiber_vanishing(sp.fiber, Family::A, s, log);
    return zero_result();
  }

  if (fam == Family::Cv) {
    if (s == 0) return base_eval(sp, tensor(wq, sp.push.chi_C_0), log);
    if (s == 2) {
      log_fact(log, kFactCvS2H0);
      log_fact(log, kFactCvS2Bound);
      CohomologyTable ub =
          cohomology(ft, sheaf_rep(ft, {Family::Cv, p, q}), false);
      return FamilyResult{Range::exactly(0), Range{0, to_ll(ub.total(1))}};
    }
    if (s >= 1) require_fiber_vanishing(sp.fiber, Family::C, s, log);
    return zero_result();
  }

  // Tv
  if (s == -1) return base_eval(sp, tensor(wq, sp.push.chi_T_m1), log);
  if (s == 0) return base_eval(sp, tensor(wq, sp.push.chi_T_0), log);
  if (s == 2 && q == 0) {
    log_fact(log, kFactTvFiberRecursion);
    FamilyResult fib = family_cell(sp.fiber, Family::T, 2, 0, log);
    return FamilyResult{Range::exactly(0), fib.h1};
  }
  FamilyResult x = family_cell(ft, Family::Av, p, q, log);
  FamilyResult z = family_cell(ft, Family::Cv, p, q, log);
  return res_of(les_middle(node_of(x), node_of(z)));
}

FamilyResult ungraded_multi_step(const FlagType& ft, Family fam, int p,
                                 AssumptionLog* log) {
  const int m = ft.m, n = ft.n;
  BaseFiberSplit sp = base_fiber_split(ft);

  if (fam == Family::O) {
    for (int t = 1; t <= p; ++t) require_fiber_vanishing(sp.fiber, Family::O, t, log);
    return base_eval(sp, wedge_of(sp.push.phi_B, p, m, n), log);
  }

  Family vfam = fam == Family::A ? Family::Av
                : fam == Family::C ? Family::Cv
                                   : Family::Tv;
  Family hfam = fam == Family::A ? Family::Ah
                : fam == Family::C ? Family::Ch
                                   : Family::Th;

  // External anchor for the degree-0 sub-family: sections of the full
  // tangent sheaf have dimension m^2 + n^2, and they surject onto the
  // quotient family, pinning h0 of the sub at p = 0.
  std::optional<Range> anchor_h0;
  const bool admissible = validate_flag_type(ft).admissible;
  const long long gl_dim =
      static_cast<long long>(m) * m + static_cast<long long>(n) * n;
  if (fam == Family::T && p == 0 && admissible) {
    log_fact(log, kFactGlobalTangent);
    anchor_h0 = Range::exactly(gl_dim);
  }
  if (fam == Family::A && p == 0 && admissible) {
    FamilyResult c0 = family_cell(ft, Family::C, 0, 0, log);
    if (c0.h0.exact()) {
      log_fact(log, kFactGlobalTangent);
      log_fact(log, kFactTangentSurjects0);
      anchor_h0 = Range::exactly(gl_dim - c0.h0.lo);
    }
  }

  // Oracle input for the tangent family at p = 2.
  bool oracle_22 = false;
  if (fam == Family::T && p == 2) {
    CocycleDims dims = vertical_cocycle_dim(ft);
    if (dims.h1 == 0) {
      oracle_22 = true;
      log_fact(log, kFactOracle22);
    }
  }

  // Fold the vertical-degree filtration from the deepest piece (q = p + 1)
  // outward; each graded piece is itself chained from its v/h halves.
  std::optional<LesNode> acc;
  for (int q = p + 1; q >= -1; --q) {
    FamilyResult v = family_cell(ft, vfam, p, q, log);
    FamilyResult h = family_cell(ft, hfam, p, q, log);
    LesNode cell = les_middle(node_of(v), node_of(h));
    if (oracle_22 && q == 2) {
      cell.h0 = intersect(cell.h0, Range::exactly(0));
      cell.h1 = intersect(cell.h1, Range::exactly(0));
    }
    if (!acc) {
      acc = cell;
      continue;
    }
    LesOptions opt;
    if (anchor_h0 && q == 0) opt.known_h0y = anchor_h0;
    acc = les_middle(*acc, cell, opt);
  }
  LesNode out = *acc;
  if (fam == Family::T && p == 2 && admissible) {
    log_fact(log, kFactNonSplit);
    out.h1 = intersect(out.h1, Range{1, std::numeric_limits<long long>::max()});
  }
  return res_of(out);
}

FamilyResult family_h01_impl(const FlagType& ft, Family fam, int p, int q,
                             AssumptionLog* log) {
  if (p < -1) return zero_result();
  if (ft.r() < 2) {
    if (family_is_graded_vh(fam))
      throw FlagrigError("v/h split undefined at r=1");
    return family_one_step(ft, fam, p, log);
  }
  if (family_is_graded_vh(fam)) return graded_cell_multi_step(ft, fam, p, q, log);
  return ungraded_multi_step(ft, fam, p, log);
}

}  // namespace

FamilyResult family_h01(const FlagType& ft, Family fam, int p, int q,
                        AssumptionLog* log) {
  if (family_is_ungraded(fam)) q = 0;
  thread_local std::map<std::string, MemoEntry> memo;
  const std::string key = memo_key(ft, fam, p, q);
  auto it = memo.find(key);
  if (it == memo.end()) {
    MemoEntry entry;
    entry.result = family_h01_impl(ft, fam, p, q, &entry.log);
    it = memo.emplace(key, std::move(entry)).first;
  }
  if (log) log->insert(it->second.log.begin(), it->second.log.end());
  return it->second.result;
}

BigInt pushforward_rank(const FlagType& ft, Family family, int p, int q) {
  BaseFiberSplit sp = base_fiber_split(ft);
  const int s = p - q;
  if (q < 0) return 0;
  Character wq = wedge_of(sp.push.phi_B, q, ft.m, ft.n);
  if (wq.empty()) return 0;
  const Character* chi = nullptr;
  if ((family == Family::Av || family == Family::A) && s == -1)
    chi = &sp.push.chi_A_m1;
  else if ((family == Family::Av || family == Family::A) && s == 0)
    chi = &sp.push.chi_A_0;
  else if ((family == Family::Cv || family == Family::C) && s == 0)
    chi = &sp.push.chi_C_0;
  else if ((family == Family::Tv || family == Family::T) && s == -1)
    chi = &sp.push.chi_T_m1;
  else if ((family == Family::Tv || family == Family::T) && s == 0)
    chi = &sp.push.chi_T_0;
  if (!chi) return 0;
  return dimension(wq) * dimension(*chi);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Rigid: return "Rigid";
    case Verdict::NotProven: return "NotProven";
    case Verdict::OutsideHypotheses: return "OutsideHypotheses";
  }
  return "?";
}

RigidityVerdict rigidity_report(const FlagType& ft, const RigidityOptions& opt) {
  RigidityVerdict rv;
  rv.vft = validate_flag_type(ft);
  rv.h1_T2 = Range::exactly(0);
  rv.h1_T = Range{0, std::numeric_limits<long long>::max()};
  if (!rv.vft.generic || ft.n == 0) {
    rv.verdict = Verdict::OutsideHypotheses;
    rv.notes.push_back(rv.vft.violation);
    return rv;
  }
  if (!rv.vft.admissible && !opt.allow_nonadmissible) {
    rv.verdict = Verdict::OutsideHypotheses;
    rv.notes.push_back(rv.vft.violation);
    rv.notes.push_back(
        "not admissible: refusing to compute (override available)");
    return rv;
  }
  if (!rv.vft.admissible)
    rv.notes.push_back(
        "computed under override; standing hypotheses are not satisfied");

  const int p_max =
      opt.max_p >= 0 ? opt.max_p : static_cast<int>(odd_dimension(ft));
  try {
    if (ft.r() >= 2) {
      for (Family fam : {Family::Av, Family::Ah, Family::Cv, Family::Ch,
                         Family::Tv, Family::Th})
        for (int p = -1; p <= p_max; ++p)
          for (int q = -1; q <= p + 1; ++q)
            rv.cells[CellKey{fam, p, q}] =
                family_h01(ft, fam, p, q, &rv.assumption_log);
    }
    for (int p = -1; p <= p_max; ++p)
      rv.graded_tangent[p] =
          family_h01(ft, Family::T, p, 0, &rv.assumption_log);
    if (p_max >= 2) rv.h1_T2 = rv.graded_tangent[2].h1;

    // Filtration of the full tangent sheaf by odd degree, folded from the
    // deepest piece down to degree -1 (the odd part of the tangent sheaf).
    LesNode acc = node_of(rv.graded_tangent[p_max]);
    for (int p = p_max - 1; p >= -1; --p) {
      LesOptions lopt;
      if (p == 0 && rv.vft.admissible) {
        lopt.forced_connecting_rank = 1;
        rv.assumption_log.insert(kFactGradingField);
        rv.assumption_log.insert(kFactGlobalTangent);
      }
      acc = les_middle(acc, node_of(rv.graded_tangent[p]), lopt);
    }
    rv.h1_T = acc.h1;
  } catch (const FlagrigError& e) {
    rv.verdict =
        rv.vft.admissible ? Verdict::NotProven : Verdict::OutsideHypotheses;
    rv.notes.push_back(std::string("computation stopped: ") + e.what());
    return rv;
  }

  if (!rv.vft.admissible)
    rv.verdict = Verdict::OutsideHypotheses;
  else if (rv.h1_T.is(0))
    rv.verdict = Verdict::Rigid;
  else
    rv.verdict = Verdict::NotProven;
  return rv;
}

}  // namespace flagrig
