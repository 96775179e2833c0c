// Command-line surface: validate | reps | cohomology | rigidity |
// oracle-cocycle | bwb-classify, with json/csv/md output and an optional
// content-addressed result cache.

#include "flagrig/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace flagrig;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad tuple entry");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty tuple");
  return out;
}

struct Common {
  int m = 0, n = 0;
  std::string k_spec, l_spec;
  std::string format = "json";
  std::string cache_dir;
  bool allow_nonadmissible = false;

  FlagType flag_type() const {
    FlagType ft;
    ft.m = m;
    ft.n = n;
    ft.k = parse_tuple(k_spec);
    ft.l = parse_tuple(l_spec);
    if (ft.k[0] != m)
      throw std::invalid_argument("k tuple must start with k0 = m");
    if (ft.l[0] != n)
      throw std::invalid_argument("l tuple must start with l0 = n");
    return ft;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_override = false) {
  cmd->add_option("--m", c.m, "even dimension m")->required();
  cmd->add_option("--n", c.n, "odd dimension n")->required();
  cmd->add_option("--k", c.k_spec, "comma tuple k0,...,kr (k0 = m)")->required();
  cmd->add_option("--l", c.l_spec, "comma tuple l0,...,lr (l0 = n)")->required();
  cmd->add_option("--format", c.format, "output format: json|csv|md");
  cmd->add_option("--cache-dir", c.cache_dir,
                  "cache directory (or FLAGRIG_CACHE_DIR)");
  if (with_override)
    cmd->add_flag("--allow-nonadmissible", c.allow_nonadmissible,
                  "compute even when the type fails the standing hypotheses");
}

int emit(const Json& env, const std::string& format) {
  auto fmt = format_from_name(format);
  if (!fmt) {
    std::cerr << "unknown output format: " << format << "\n";
    return kExitUsage;
  }
  std::cout << render(env, *fmt);
  return kExitOk;
}

std::string effective_cache_dir(const Common& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  const char* env = std::getenv("FLAGRIG_CACHE_DIR");
  return env ? env : "";
}

int cmd_validate(const Common& c) {
  FlagType ft = c.flag_type();
  ValidatedFlagType v = validate_flag_type(ft);
  int rc = emit(envelope(ft, "validate", json_of(v)), c.format);
  if (rc != kExitOk) return rc;
  return v.admissible ? kExitOk : kExitDomain;
}

int cmd_reps(const Common& c) {
  FlagType ft = c.flag_type();
  ValidatedFlagType v = validate_flag_type(ft);
  if (!v.generic) {
    std::cerr << v.violation << "\n";
    return kExitDomain;
  }
  BlockStructure bs = reductive_blocks(ft);
  Json payload = Json::array();
  for (RepId id : {RepId::Phi, RepId::Psi, RepId::Theta, RepId::Tau,
                   RepId::TauV, RepId::TauH}) {
    if ((id == RepId::TauV || id == RepId::TauH) && ft.r() < 2) continue;
    NamedRep rep = named_rep(ft, id);
    Json e;
    const char* names[] = {"phi", "psi", "theta", "tau", "tau_v", "tau_h"};
    e["name"] = names[static_cast<int>(id)];
    e["dim"] = json_of(dimension(rep.character));
    Json cons = Json::array();
    for (const auto& [hw, mult] : decompose(bs, rep.character).constituents) {
      Json ce;
      ce["mu"] = hw.mu;
      ce["la"] = hw.la;
      ce["mult"] = json_of(mult);
      cons.push_back(ce);
    }
    e["constituents"] = cons;
    payload.push_back(e);
  }
  return emit(envelope(ft, "reps", payload), c.format);
}

int cmd_cohomology(const Common& c, const std::string& sheaf, int p, int q,
                   int deg) {
  FlagType ft = c.flag_type();
  auto fam = family_from_name(sheaf);
  if (!fam) {
    std::cerr << "unknown sheaf family: " << sheaf << "\n";
    return kExitUsage;
  }
  SheafId id{*fam, p, q};
  ResultCache cache(effective_cache_dir(c));
  const std::string key = ResultCache::cohomology_key(ft, id);
  Json table_json;
  bool cache_hit = false;
  if (auto hit = cache.load(key)) {
    table_json = *hit;
    cache_hit = true;
  } else {
    CohomologyTable t =
        cohomology(ft, sheaf_rep(ft, id), /*assert_cr=*/ft.r() < 2);
    table_json = json_of(t);
    cache.store(key, table_json);
  }
  Json payload;
  payload["sheaf"] = id.to_string();
  payload["table"] = table_json;
  payload["cache_hit"] = cache_hit;
  if (deg >= 0) {
    std::string total = "0";
    for (const auto& d : table_json["degrees"])
      if (d["degree"].get<int>() == deg) total = d["total"].get<std::string>();
    payload["requested_degree"] = deg;
    payload["requested_total"] = total;
  }
  return emit(envelope(ft, "cohomology", payload), c.format);
}

int cmd_rigidity(const Common& c) {
  FlagType ft = c.flag_type();
  RigidityOptions opt;
  opt.allow_nonadmissible = c.allow_nonadmissible;
  RigidityVerdict rv = rigidity_report(ft, opt);
  int rc = emit(envelope(ft, "rigidity", json_of(rv), rv.assumption_log),
                c.format);
  if (rc != kExitOk) return rc;
  return rv.verdict == Verdict::Rigid ? kExitOk : kExitDomain;
}

int cmd_oracle(const Common& c) {
  FlagType ft = c.flag_type();
  try {
    CocycleDims d = vertical_cocycle_dim(ft);
    return emit(envelope(ft, "oracle-cocycle", json_of(d)), c.format);
  } catch (const FlagrigError& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }
}

int cmd_classify(const Common& c, const std::string& mu_spec,
                 const std::string& la_spec) {
  FlagType ft = c.flag_type();
  Weight w;
  w.mu = parse_tuple(mu_spec);
  w.la = parse_tuple(la_spec);
  if (static_cast<int>(w.mu.size()) != ft.m ||
      static_cast<int>(w.la.size()) != ft.n)
    throw std::invalid_argument("weight length must match m and n");
  RootData rd = build_root_data(ft.m, ft.n);
  BottClass bc = classify(w, rd);
  Json payload;
  payload["mu"] = w.mu;
  payload["la"] = w.la;
  payload["singular"] = bc.kind == BottKind::Singular;
  if (bc.kind == BottKind::Regular) {
    payload["index"] = bc.index;
    payload["dot_mu"] = bc.dot_image.mu;
    payload["dot_la"] = bc.dot_image.la;
    payload["dim"] = json_of(weyl_dim(bc.dot_image, rd));
  }
  return emit(envelope(ft, "bwb-classify", payload), c.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomological rigidity calculator for flag supermanifolds"};
  app.require_subcommand(1);

  Common c_validate, c_reps, c_coh, c_rig, c_oracle, c_classify;
  std::string sheaf = "T";
  int p = 0, q = 0, deg = -1;
  std::string mu_spec, la_spec;

  add_common(app.add_subcommand("validate", "check the standing hypotheses"),
             c_validate);
  add_common(app.add_subcommand("reps", "named isotropy representations"),
             c_reps);
  CLI::App* coh = app.add_subcommand(
      "cohomology", "semisimplified evaluation of one catalog sheaf");
  add_common(coh, c_coh);
  coh->add_option("--sheaf", sheaf, "family: O|A|C|T|Av|Ah|Cv|Ch|Tv|Th")
      ->required();
  coh->add_option("--p", p, "odd degree p");
  coh->add_option("--q", q, "vertical degree q (graded families)");
  coh->add_option("--deg", deg, "report one cohomological degree");
  add_common(app.add_subcommand("rigidity", "full verdict report"), c_rig,
             /*with_override=*/true);
  add_common(app.add_subcommand("oracle-cocycle",
                                "vertical cocycle dimensions at the (2,2) cell"),
             c_oracle);
  CLI::App* cls = app.add_subcommand("bwb-classify",
                                     "classify one shifted weight");
  add_common(cls, c_classify);
  cls->add_option("--mu", mu_spec, "weight mu part, comma tuple")->required();
  cls->add_option("--la", la_spec, "weight lambda part, comma tuple")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("validate")) return cmd_validate(c_validate);
    if (app.got_subcommand("reps")) return cmd_reps(c_reps);
    if (app.got_subcommand("cohomology"))
      return cmd_cohomology(c_coh, sheaf, p, q, deg);
    if (app.got_subcommand("rigidity")) return cmd_rigidity(c_rig);
    if (app.got_subcommand("oracle-cocycle")) return cmd_oracle(c_oracle);
    if (app.got_subcommand("bwb-classify"))
      return cmd_classify(c_classify, mu_spec, la_spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const flagrig::FlagrigError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
