#include "flagrig/flag_geometry.hpp"

#include <algorithm>
#include <sstream>

namespace flagrig {

namespace {

bool strictly_decreasing_positive(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] <= v[i]) return false;
  return v.back() > 0;
}

// Adds the weights of blockA (x) dual(blockB) to out, where blockA/blockB
// select coordinate ranges; part 0 = mu coordinates, 1 = lambda.
void add_std_tensor_dual(Character& out, int m, int n, int partA, int offA,
                         int sizeA, int partB, int offB, int sizeB) {
  for (int a = 0; a < sizeA; ++a)
    for (int b = 0; b < sizeB; ++b) {
      Weight w = zero_weight(m, n);
      (partA == 0 ? w.mu : w.la)[offA + a] += 1;
      (partB == 0 ? w.mu : w.la)[offB + b] -= 1;
      out[w] += 1;
    }
}

}  // namespace

std::string FlagType::to_string() const {
  std::ostringstream os;
  os << "m=" << m << " n=" << n << " k=";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << " l=";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  return os.str();
}

ValidatedFlagType validate_flag_type(const FlagType& ft) {
  ValidatedFlagType v;
  v.ft = ft;
  if (ft.m < 1 || ft.k.size() < 2 || ft.k.size() != ft.l.size()) {
    v.violation = "malformed tuples (need k0..kr, l0..lr with r >= 1)";
    return v;
  }
  if (ft.k[0] != ft.m || ft.l[0] != ft.n) {
    v.violation = "k0 must equal m and l0 must equal n";
    return v;
  }
  bool mu_ok = strictly_decreasing_positive(ft.k);
  bool la_ok = (ft.n == 0)
                   ? std::all_of(ft.l.begin(), ft.l.end(),
                                 [](int x) { return x == 0; })
                   : strictly_decreasing_positive(ft.l);
  if (!mu_ok || !la_ok) {
    v.violation = "flag condition 0 < k_r < ... < k_1 < m violated";
    return v;
  }
  v.generic = true;
  if (ft.n == 0) {
    v.violation = "purely even type (n = 0), outside the super hypotheses";
    return v;
  }
  int r = ft.r();
  int kr = ft.k[r], lr = ft.l[r];
  int kp = ft.k[r - 1], lp = ft.l[r - 1];
  const std::pair<int, int> forbidden[] = {
      {1, lp - 1}, {kp - 1, 1}, {1, lp - 2}, {kp - 2, 1}, {2, lp - 1}, {kp - 1, 2}};
  for (auto [fk, fl] : forbidden)
    if (kr == fk && lr == fl) {
      std::ostringstream os;
      os << "(k_r,l_r)=(" << kr << "," << lr << ") hits forbidden pair ("
         << fk << "," << fl << ") relative to (k_{r-1},l_{r-1})=(" << kp << ","
         << lp << ")";
      v.violation = os.str();
      return v;
    }
  v.admissible = true;
  return v;
}

BlockStructure reductive_blocks(const FlagType& ft) {
  BlockStructure bs;
  bs.m = ft.m;
  bs.n = ft.n;
  int r = ft.r();
  for (int i = 1; i <= r; ++i) bs.mu_blocks.push_back(ft.k[i - 1] - ft.k[i]);
  bs.mu_blocks.push_back(ft.k[r]);  // k_{r+1} = 0
  for (int i = 1; i <= r; ++i)
    bs.lambda_blocks.push_back(ft.l[i - 1] - ft.l[i]);
  bs.lambda_blocks.push_back(ft.l[r]);
  return bs;
}

NamedRep named_rep(const FlagType& ft, RepId id) {
  BlockStructure bs = reductive_blocks(ft);
  int nb = static_cast<int>(bs.mu_blocks.size());
  Character c;
  auto mu_off = [&](int i) { return bs.mu_offset(i); };
  auto la_off = [&](int i) { return bs.lambda_offset(i); };
  auto mu_sz = [&](int i) { return bs.mu_blocks[i]; };
  auto la_sz = [&](int i) { return bs.lambda_blocks[i]; };

  // dual(rho_i) (x) sigma_j as weights
  auto add_rho_dual_sigma = [&](int i, int j) {
    add_std_tensor_dual(c, ft.m, ft.n, 1, la_off(j), la_sz(j), 0, mu_off(i),
                        mu_sz(i));
  };
  auto add_sigma_dual_rho = [&](int i, int j) {
    add_std_tensor_dual(c, ft.m, ft.n, 0, mu_off(j), mu_sz(j), 1, la_off(i),
                        la_sz(i));
  };
  auto add_rho_dual_rho = [&](int i, int j) {  // rho_i (x) dual(rho_j)
    add_std_tensor_dual(c, ft.m, ft.n, 0, mu_off(i), mu_sz(i), 0, mu_off(j),
                        mu_sz(j));
  };
  auto add_sigma_dual_sigma = [&](int i, int j) {
    add_std_tensor_dual(c, ft.m, ft.n, 1, la_off(i), la_sz(i), 1, la_off(j),
                        la_sz(j));
  };

  switch (id) {
    case RepId::Phi:
      for (int j = 1; j < nb; ++j) {
        add_rho_dual_sigma(0, j);
        add_sigma_dual_rho(0, j);
      }
      break;
    case RepId::Psi:
      for (int i = 1; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
          add_rho_dual_sigma(i, j);
          add_sigma_dual_rho(i, j);
        }
      break;
    case RepId::Theta:
      for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
          add_rho_dual_sigma(i, j);
          add_sigma_dual_rho(i, j);
        }
      break;
    case RepId::Tau:
      for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
          add_rho_dual_rho(i, j);
          add_sigma_dual_sigma(i, j);
        }
      break;
    case RepId::TauV:
      for (int i = 1; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
          add_rho_dual_rho(i, j);
          add_sigma_dual_sigma(i, j);
        }
      break;
    case RepId::TauH:
      for (int j = 1; j < nb; ++j) {
        add_rho_dual_rho(0, j);
        add_sigma_dual_sigma(0, j);
      }
      break;
    case RepId::Nilradical:
      for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
          add_rho_dual_rho(j, i);  // weights -mu^p_a + mu^q_b, p < q
          add_sigma_dual_sigma(j, i);
        }
      break;
    case RepId::NilradicalB:
      for (int j = 1; j < nb; ++j) {
        add_rho_dual_rho(j, 0);
        add_sigma_dual_sigma(j, 0);
      }
      break;
  }
  return NamedRep{id, std::move(c)};
}

long long odd_dimension(const FlagType& ft) {
  BlockStructure bs = reductive_blocks(ft);
  long long d = 0;
  int nb = static_cast<int>(bs.mu_blocks.size());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      d += static_cast<long long>(bs.mu_blocks[i]) * bs.lambda_blocks[j] +
           static_cast<long long>(bs.lambda_blocks[i]) * bs.mu_blocks[j];
  return d;
}

BaseFiberSplit base_fiber_split(const FlagType& ft) {
  if (ft.r() < 2)
    throw FlagrigError("base_fiber_split: requires r >= 2");
  BaseFiberSplit sp;
  sp.base = FlagType{ft.m, ft.n, {ft.m, ft.k[1]}, {ft.n, ft.l[1]}};
  sp.fiber = FlagType{ft.k[1], ft.l[1],
                      std::vector<int>(ft.k.begin() + 1, ft.k.end()),
                      std::vector<int>(ft.l.begin() + 1, ft.l.end())};
  int m = ft.m, n = ft.n, k1 = ft.k[1], l1 = ft.l[1];
  auto& p = sp.push;
  // Base blocks: mu = (m-k1, k1), lambda = (n-l1, l1); block 2 offsets:
  int mo = m - k1, lo = n - l1;
  for (int a = 0; a < k1; ++a)
    for (int b = 0; b < l1; ++b) {
      Weight w = zero_weight(m, n);
      w.mu[mo + a] = -1;
      w.la[lo + b] = 1;
      p.chi_A_m1[w] += 1;
      Weight u = zero_weight(m, n);
      u.mu[mo + a] = 1;
      u.la[lo + b] = -1;
      p.chi_A_m1[u] += 1;
    }
  p.chi_A_0[zero_weight(m, n)] = 2;
  // Traceless adjoints of the k1 and l1 blocks: root weights plus
  // (blocksize - 1) zero weights each.
  auto add_sl_adjoint = [&](int part, int off, int size) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        if (a == b) continue;
        Weight w = zero_weight(m, n);
        (part == 0 ? w.mu : w.la)[off + a] = 1;
        (part == 0 ? w.mu : w.la)[off + b] = -1;
        p.chi_C_0[w] += 1;
      }
    if (size > 1) p.chi_C_0[zero_weight(m, n)] += size - 1;
  };
  add_sl_adjoint(0, mo, k1);
  add_sl_adjoint(1, lo, l1);
  p.chi_T_m1 = p.chi_A_m1;
  p.chi_T_0 = direct_sum(p.chi_C_0, p.chi_A_0);
  p.phi_B = named_rep(sp.base, RepId::Phi).character;
  return sp;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::O: return "O";
    case Family::Av: return "Av";
    case Family::Ah: return "Ah";
    case Family::A: return "A";
    case Family::Cv: return "Cv";
    case Family::Ch: return "Ch";
    case Family::C: return "C";
    case Family::Tv: return "Tv";
    case Family::Th: return "Th";
    case Family::T: return "T";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::O, Family::Av, Family::Ah, Family::A, Family::Cv,
                   Family::Ch, Family::C, Family::Tv, Family::Th, Family::T})
    if (family_name(f) == s) return f;
  return std::nullopt;
}

bool family_is_graded_vh(Family f) {
  return f == Family::Av || f == Family::Ah || f == Family::Cv ||
         f == Family::Ch || f == Family::Tv || f == Family::Th;
}

bool family_is_ungraded(Family f) {
  return f == Family::O || f == Family::A || f == Family::C || f == Family::T;
}

}  // namespace flagrig
