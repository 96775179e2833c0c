#include "flagrig/supercharts.hpp"

#include <algorithm>
#include <sstream>

namespace flagrig {

namespace {

// Merge sorted odd-variable lists; returns the reordering sign, or 0 when a
// variable repeats (odd squares vanish).
int merge_odd(const std::vector<int>& a, const std::vector<int>& b,
              std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long long swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      swaps += static_cast<long long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (swaps % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<int, int>> merge_even(const std::vector<std::pair<int, int>>& a,
                                            const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

void add_term(SuperPoly& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    p.terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace

SuperPoly sp_const(const Rat& c) {
  SuperPoly p;
  add_term(p, Monomial{}, c);
  return p;
}

SuperPoly sp_var(int id, bool odd) {
  Monomial m;
  if (odd) {
    m.odd.push_back(id);
  } else {
    m.even.emplace_back(id, 1);
  }
  SuperPoly p;
  add_term(p, m, 1);
  return p;
}

SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, c);
  return out;
}

SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, -c);
  return out;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly out;
  std::vector<int> odd;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      int sign = merge_odd(ma.odd, mb.odd, odd);
      if (sign == 0) continue;
      Monomial m;
      m.even = merge_even(ma.even, mb.even);
      m.odd = odd;
      add_term(out, m, ca * cb * sign);
    }
  }
  return out;
}

SuperPoly sp_scale(const SuperPoly& a, const Rat& c) {
  SuperPoly out;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms) out.terms.emplace(m, v * c);
  return out;
}

ChartIndexSet standard_chart_index(const FlagType& ft) {
  ChartIndexSet I;
  const int r = ft.r();
  for (int s = 1; s <= r; ++s) {
    std::vector<int> ev, od;
    for (int a = 0; a < ft.k[s]; ++a) ev.push_back(ft.k[s - 1] - ft.k[s] + a);
    for (int b = 0; b < ft.l[s]; ++b) od.push_back(ft.l[s - 1] - ft.l[s] + b);
    I.even_rows.push_back(std::move(ev));
    I.odd_rows.push_back(std::move(od));
  }
  return I;
}

int Chart::var_at(int s, int row, int col) const {
  for (int id = 0; id < var_count(); ++id) {
    const VarInfo& v = vars[id];
    if (v.s == s && v.row == row && v.col == col) return id;
  }
  return -1;
}

Chart build_chart(const FlagType& ft, const ChartIndexSet& I) {
  const int r = ft.r();
  if (static_cast<int>(I.even_rows.size()) != r ||
      static_cast<int>(I.odd_rows.size()) != r)
    throw FlagrigError("chart index set has wrong number of levels");
  Chart ch;
  ch.ft = ft;
  ch.index = I;
  for (int s = 1; s <= r; ++s) {
    const int kp = ft.k[s - 1], lp = ft.l[s - 1];
    const int ks = ft.k[s], ls = ft.l[s];
    if (static_cast<int>(I.even_rows[s - 1].size()) != ks ||
        static_cast<int>(I.odd_rows[s - 1].size()) != ls)
      throw FlagrigError("chart index set has wrong sizes");
    // Column position of the embedded identity, or -1 for a free row.
    std::vector<int> even_pos(kp, -1), odd_pos(lp, -1);
    for (int a = 0; a < ks; ++a) even_pos.at(I.even_rows[s - 1][a]) = a;
    for (int b = 0; b < ls; ++b) odd_pos.at(I.odd_rows[s - 1][b]) = b;
    Mat Z(kp + lp, std::vector<SuperPoly>(ks + ls));
    for (int row = 0; row < kp + lp; ++row) {
      const bool row_odd = row >= kp;
      const int pos = row_odd ? odd_pos[row - kp] : even_pos[row];
      if (pos >= 0) {
        const int col = row_odd ? ks + pos : pos;
        Z[row][col] = sp_const(1);
        continue;
      }
      for (int col = 0; col < ks + ls; ++col) {
        const bool col_odd = col >= ks;
        const bool odd = row_odd != col_odd;
        VarInfo vi;
        vi.odd = odd;
        vi.s = s;
        vi.row = row;
        vi.col = col;
        vi.pdeg = odd ? 1 : 0;
        vi.qdeg = (odd && s == 1) ? 1 : 0;
        const char* block = row_odd ? (col_odd ? "y" : "eta") : (col_odd ? "xi" : "x");
        std::ostringstream name;
        name << block << s << "_" << row << "_" << col;
        vi.name = name.str();
        const int id = ch.var_count();
        ch.vars.push_back(vi);
        Z[row][col] = sp_var(id, odd);
      }
    }
    ch.Z.push_back(std::move(Z));
  }
  return ch;
}

SuperPoly sp_derivative(const SuperPoly& f, int var, const Chart& chart) {
  const bool odd = var < 0 ? true : chart.vars.at(var).odd;
  SuperPoly out;
  for (const auto& [m, c] : f.terms) {
    if (odd) {
      auto it = std::find(m.odd.begin(), m.odd.end(), var);
      if (it == m.odd.end()) continue;
      const int before = static_cast<int>(it - m.odd.begin());
      Monomial mm = m;
      mm.odd.erase(mm.odd.begin() + before);
      add_term(out, mm, (before % 2 == 0) ? c : -c);
    } else {
      for (std::size_t i = 0; i < m.even.size(); ++i) {
        if (m.even[i].first != var) continue;
        Monomial mm = m;
        const int e = mm.even[i].second;
        if (e == 1)
          mm.even.erase(mm.even.begin() + i);
        else
          mm.even[i].second = e - 1;
        add_term(out, mm, c * e);
        break;
      }
    }
  }
  return out;
}

bool Derivation::zero() const {
  for (const auto& [v, c] : coeffs)
    if (!c.zero()) return false;
  return true;
}

SuperPoly apply(const Derivation& d, const SuperPoly& f, const Chart& chart) {
  SuperPoly out;
  for (const auto& [v, c] : d.coeffs) out = out + c * sp_derivative(f, v, chart);
  return out;
}

Derivation d_add(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (const auto& [v, c] : b.coeffs) {
    auto it = out.coeffs.find(v);
    if (it == out.coeffs.end())
      out.coeffs.emplace(v, c);
    else
      it->second = it->second + c;
  }
  return out;
}

Derivation d_scale(const Derivation& a, const Rat& c) {
  Derivation out;
  out.odd = a.odd;
  for (const auto& [v, p] : a.coeffs) out.coeffs.emplace(v, sp_scale(p, c));
  return out;
}

Derivation bracket(const Derivation& u, const Derivation& v, const Chart& chart) {
  Derivation out;
  out.odd = u.odd != v.odd;
  const int sign = (u.odd && v.odd) ? 1 : -1;  // -(-1)^{|u||v|}
  std::map<int, SuperPoly> result;
  for (const auto& [w, c] : v.coeffs) {
    SuperPoly t = apply(u, c, chart);
    if (!t.zero()) result[w] = result.count(w) ? result[w] + t : t;
  }
  for (const auto& [w, c] : u.coeffs) {
    SuperPoly t = sp_scale(apply(v, c, chart), sign);
    if (!t.zero()) result[w] = result.count(w) ? result[w] + t : t;
  }
  for (auto& [w, c] : result)
    if (!c.zero()) out.coeffs.emplace(w, std::move(c));
  return out;
}

namespace {

std::pair<int, int> term_bidegree(const Monomial& m, int target_var,
                                  const Chart& chart) {
  int p = 0, q = 0;
  for (const auto& [v, e] : m.even) {
    p += chart.vars.at(v).pdeg * e;
    q += chart.vars.at(v).qdeg * e;
  }
  for (int v : m.odd) {
    p += chart.vars.at(v).pdeg;
    q += chart.vars.at(v).qdeg;
  }
  p -= chart.vars.at(target_var).pdeg;
  q -= chart.vars.at(target_var).qdeg;
  return {p, q};
}

}  // namespace

Derivation project_bidegree(const Derivation& d, int p, int q, const Chart& chart) {
  Derivation out;
  out.odd = d.odd;
  for (const auto& [w, c] : d.coeffs) {
    SuperPoly kept;
    for (const auto& [m, coef] : c.terms) {
      auto [tp, tq] = term_bidegree(m, w, chart);
      if (tp == p && tq == q) add_term(kept, m, coef);
    }
    if (!kept.zero()) out.coeffs.emplace(w, std::move(kept));
  }
  return out;
}

Derivation vertical_part(const Derivation& d, const Chart& chart) {
  Derivation out;
  out.odd = d.odd;
  for (const auto& [w, c] : d.coeffs)
    if (chart.vars.at(w).s >= 2 && !c.zero()) out.coeffs.emplace(w, c);
  return out;
}

namespace {

Mat mat_identity(int n) {
  Mat E(n, std::vector<SuperPoly>(n));
  for (int i = 0; i < n; ++i) E[i][i] = sp_const(1);
  return E;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  const int n = static_cast<int>(A.size());
  const int p = static_cast<int>(B.size());
  const int q = p ? static_cast<int>(B[0].size()) : 0;
  Mat C(n, std::vector<SuperPoly>(q));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < p; ++c) {
      if (A[i][c].zero()) continue;
      for (int j = 0; j < q; ++j) {
        if (B[c][j].zero()) continue;
        C[i][j] = C[i][j] + A[i][c] * B[c][j];
      }
    }
  return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
  Mat C = A;
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < C[i].size(); ++j) C[i][j] = C[i][j] - B[i][j];
  return C;
}

// Rows carrying the embedded identity at level s, in identity-column order.
std::vector<int> identity_rows(const FlagType& ft, const ChartIndexSet& I, int s) {
  std::vector<int> rows;
  for (int a : I.even_rows[s - 1]) rows.push_back(a);
  for (int b : I.odd_rows[s - 1]) rows.push_back(ft.k[s - 1] + b);
  return rows;
}

Mat mat_rows(const Mat& A, const std::vector<int>& rows) {
  Mat C;
  for (int r : rows) C.push_back(A.at(r));
  return C;
}

// Auxiliary first-order parameter ids; chosen below every chart variable id so
// they sort first inside canonical odd monomials and strip without signs.
constexpr int kEps1 = -2;
constexpr int kEps2 = -1;

SuperPoly strip_param(const SuperPoly& f, bool odd_param) {
  SuperPoly out;
  for (const auto& [m, c] : f.terms) {
    if (odd_param) {
      if (m.odd.empty() || m.odd.front() != kEps1) continue;
      Monomial mm = m;
      mm.odd.erase(mm.odd.begin());
      add_term(out, mm, c);
    } else {
      if (m.odd.size() < 2 || m.odd[0] != kEps1 || m.odd[1] != kEps2) continue;
      Monomial mm = m;
      mm.odd.erase(mm.odd.begin(), mm.odd.begin() + 2);
      add_term(out, mm, c);
    }
  }
  return out;
}

}  // namespace

Derivation fundamental_field(const Chart& chart, const std::vector<std::vector<Rat>>& L,
                             bool odd_part) {
  const FlagType& ft = chart.ft;
  const int m = ft.m, n = ft.n;
  if (static_cast<int>(L.size()) != m + n)
    throw FlagrigError("fundamental_field: matrix has wrong size");
  SuperPoly P = odd_part ? sp_var(kEps1, true)
                         : sp_var(kEps1, true) * sp_var(kEps2, true);
  Mat Cprev = mat_identity(m + n);
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) {
      const bool pos_odd = (i >= m) != (j >= m);
      if (pos_odd != odd_part || L[i][j] == 0) continue;
      Cprev[i][j] = Cprev[i][j] + sp_scale(P, L[i][j]);
    }
  Derivation out;
  out.odd = odd_part;
  for (int s = 1; s <= ft.r(); ++s) {
    Mat M = mat_mul(Cprev, chart.Z[s - 1]);
    Mat C = mat_rows(M, identity_rows(ft, chart.index, s));
    // C = E + (first-order nilpotent), so its inverse is 2E - C.
    Mat Cinv = mat_sub(mat_identity(static_cast<int>(C.size())), mat_sub(C, mat_identity(static_cast<int>(C.size()))));
    Mat D = mat_sub(mat_mul(M, Cinv), chart.Z[s - 1]);
    for (std::size_t row = 0; row < D.size(); ++row)
      for (std::size_t col = 0; col < D[row].size(); ++col) {
        const int v = chart.var_at(s, static_cast<int>(row), static_cast<int>(col));
        if (v < 0) continue;
        SuperPoly coeff = strip_param(D[row][col], odd_part);
        if (!coeff.zero()) out.coeffs[v] = coeff;
      }
    Cprev = std::move(C);
  }
  return out;
}

namespace {

// Matrix with a single scalar denominator (even, odd-variable-free).
struct FracMat {
  Mat num;
  SuperPoly den;
};

FracMat fm_from(const Mat& m) { return FracMat{m, sp_const(1)}; }

FracMat fm_mul(const FracMat& a, const FracMat& b) {
  return FracMat{mat_mul(a.num, b.num), a.den * b.den};
}

SuperPoly body_part(const SuperPoly& f) {
  SuperPoly out;
  for (const auto& [m, c] : f.terms)
    if (m.odd.empty()) add_term(out, m, c);
  return out;
}

SuperPoly mat_det(const Mat& A) {
  const int n = static_cast<int>(A.size());
  if (n == 0) return sp_const(1);
  if (n == 1) return A[0][0];
  SuperPoly det;
  for (int i = 0; i < n; ++i) {
    if (A[i][0].zero()) continue;
    Mat minor;
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<SuperPoly> row(A[r].begin() + 1, A[r].end());
      minor.push_back(std::move(row));
    }
    SuperPoly t = A[i][0] * mat_det(minor);
    det = (i % 2 == 0) ? det + t : det - t;
  }
  return det;
}

Mat mat_adjugate(const Mat& A) {
  const int n = static_cast<int>(A.size());
  Mat adj(n, std::vector<SuperPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<SuperPoly> row;
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(A[r][c]);
        minor.push_back(std::move(row));
      }
      SuperPoly cof = mat_det(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : sp_const(0) - cof;
    }
  return adj;
}

int count_odd_vars(const FlagType& ft) {
  int total = 0;
  for (int s = 1; s <= ft.r(); ++s) {
    const int kp = ft.k[s - 1], lp = ft.l[s - 1];
    const int ks = ft.k[s], ls = ft.l[s];
    total += (kp - ks) * ls + (lp - ls) * ks;
  }
  return total;
}

// Inverse of an invertible square matrix over the chart algebra: invert the
// odd-variable-free body by adjugate/determinant, then expand the nilpotent
// remainder by a finite Neumann series.
FracMat fm_inverse(const FracMat& A, int odd_var_bound) {
  const int n = static_cast<int>(A.num.size());
  Mat body(n, std::vector<SuperPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) body[i][j] = body_part(A.num[i][j]);
  SuperPoly det = mat_det(body);
  if (det.zero()) throw FlagrigError("matrix inversion: singular body");
  FracMat body_inv{mat_adjugate(body), det};
  Mat nil = mat_sub(A.num, body);
  // X = body_inv * nil is nilpotent; inv(A.num) = (sum (-X)^t) * body_inv.
  FracMat X = fm_mul(body_inv, fm_from(nil));
  FracMat acc{mat_identity(n), sp_const(1)};
  FracMat powX{mat_identity(n), sp_const(1)};
  for (int t = 1; t <= odd_var_bound; ++t) {
    powX = fm_mul(powX, X);
    for (auto& row : powX.num)
      for (auto& e : row) e = sp_const(0) - e;
    // acc += powX over a common denominator.
    Mat lhs = acc.num, rhs = powX.num;
    for (auto& row : lhs)
      for (auto& e : row) e = e * powX.den;
    for (auto& row : rhs)
      for (auto& e : row) e = e * acc.den;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lhs[i][j] = lhs[i][j] + rhs[i][j];
    acc = FracMat{std::move(lhs), acc.den * powX.den};
  }
  FracMat inv = fm_mul(acc, body_inv);
  // Incorporate the incoming scalar denominator: (num/den)^{-1} = den * num^{-1}.
  for (auto& row : inv.num)
    for (auto& e : row) e = e * A.den;
  return inv;
}

}  // namespace

bool sr_equal(const SuperRat& a, const SuperRat& b) {
  return a.num * b.den == b.num * a.den;
}

TransitionMap transition(const FlagType& ft, const ChartIndexSet& I,
                         const ChartIndexSet& J) {
  Chart chI = build_chart(ft, I);
  Chart chJ = build_chart(ft, J);
  const int bound = count_odd_vars(ft);
  TransitionMap tm;
  FracMat Cprev{mat_identity(ft.m + ft.n), sp_const(1)};
  for (int s = 1; s <= ft.r(); ++s) {
    FracMat M = fm_mul(Cprev, fm_from(chI.Z[s - 1]));
    FracMat C{mat_rows(M.num, identity_rows(ft, J, s)), M.den};
    FracMat ZJ = fm_mul(M, fm_inverse(C, bound));
    for (std::size_t row = 0; row < ZJ.num.size(); ++row)
      for (std::size_t col = 0; col < ZJ.num[row].size(); ++col) {
        const int v = chJ.var_at(s, static_cast<int>(row), static_cast<int>(col));
        if (v < 0) continue;
        tm.subst[v] = SuperRat{ZJ.num[row][col], ZJ.den};
      }
    Cprev = std::move(C);
  }
  return tm;
}

namespace {

SuperRat sr_mul(const SuperRat& a, const SuperRat& b) {
  return SuperRat{a.num * b.num, a.den * b.den};
}

SuperRat sr_add(const SuperRat& a, const SuperRat& b) {
  return SuperRat{a.num * b.den + b.num * a.den, a.den * b.den};
}

}  // namespace

SuperRat substitute(const SuperPoly& f, const TransitionMap& tm,
                    const Chart& source_of_f) {
  (void)source_of_f;
  SuperRat out{SuperPoly{}, sp_const(1)};
  for (const auto& [m, c] : f.terms) {
    SuperRat term{sp_const(c), sp_const(1)};
    for (const auto& [v, e] : m.even) {
      const SuperRat& val = tm.subst.at(v);
      for (int t = 0; t < e; ++t) term = sr_mul(term, val);
    }
    for (int v : m.odd) term = sr_mul(term, tm.subst.at(v));
    out = sr_add(out, term);
  }
  return out;
}

CocycleDims vertical_cocycle_dim(const FlagType& ft) {
  if (ft.r() < 2)
    throw FlagrigError("vertical cocycle computation requires at least two steps");
  const int m = ft.m, n = ft.n;
  const int k1 = ft.k[1], l1 = ft.l[1];
  Chart ch = build_chart(ft, standard_chart_index(ft));

  auto make_matrix = [&](int row, int col) {
    std::vector<std::vector<Rat>> L(m + n, std::vector<Rat>(m + n, Rat(0)));
    L[row][col] = 1;
    return L;
  };

  // Basis of the two nilradical wings acting on the first step: lower-left
  // blocks of the even part, one per matrix unit.
  struct BasisElt {
    bool mu_side;
    int alpha, beta;
    Derivation field;
  };
  std::vector<BasisElt> basis;
  for (int a = 0; a < k1; ++a)
    for (int b = 0; b < m - k1; ++b) {
      Derivation f = project_bidegree(
          fundamental_field(ch, make_matrix(m - k1 + a, b), false), 0, 0, ch);
      basis.push_back(BasisElt{true, a, b, std::move(f)});
    }
  for (int a = 0; a < l1; ++a)
    for (int b = 0; b < n - l1; ++b) {
      Derivation f = project_bidegree(
          fundamental_field(ch, make_matrix(m + (n - l1) + a, m + b), false), 0, 0,
          ch);
      basis.push_back(BasisElt{false, a, b, std::move(f)});
    }

  // Coordinate grids of the first step.
  auto x1 = [&](int i, int j) { return ch.var_at(1, i, j); };            // (m-k1) x k1
  auto xi1 = [&](int i, int j) { return ch.var_at(1, i, k1 + j); };      // (m-k1) x l1
  auto eta1 = [&](int i, int j) { return ch.var_at(1, m + i, j); };      // (n-l1) x k1
  auto y1 = [&](int i, int j) { return ch.var_at(1, m + i, k1 + j); };   // (n-l1) x l1

  // Invariant cochain family c = a*cA + b*cB in the vertical (2,2) values.
  auto cochain_A = [&](const BasisElt& x) {
    Derivation d;
    if (x.mu_side) {
      for (int i = 0; i < n - l1; ++i)
        for (int j = 0; j < l1; ++j)
          d.coeffs[y1(i, j)] =
              sp_var(eta1(i, x.alpha), true) * sp_var(xi1(x.beta, j), true);
    }
    return d;
  };
  auto cochain_B = [&](const BasisElt& x) {
    Derivation d;
    if (!x.mu_side) {
      for (int i = 0; i < m - k1; ++i)
        for (int j = 0; j < k1; ++j)
          d.coeffs[x1(i, j)] =
              sp_var(xi1(i, x.alpha), true) * sp_var(eta1(x.beta, j), true);
    }
    return d;
  };

  // (delta c)(x, y) = x.c(y) - y.c(x); the wings commute, so no bracket term.
  // Collect the vertical coefficients as linear constraints on (a, b).
  std::vector<std::pair<Rat, Rat>> rows;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const BasisElt& x = basis[i];
      const BasisElt& y = basis[j];
      Derivation dA = vertical_part(
          d_add(bracket(x.field, cochain_A(y), ch),
                d_scale(bracket(y.field, cochain_A(x), ch), -1)),
          ch);
      Derivation dB = vertical_part(
          d_add(bracket(x.field, cochain_B(y), ch),
                d_scale(bracket(y.field, cochain_B(x), ch), -1)),
          ch);
      std::map<std::pair<int, Monomial>, std::pair<Rat, Rat>> cells;
      for (const auto& [w, c] : dA.coeffs)
        for (const auto& [mn, v] : c.terms) cells[{w, mn}].first = v;
      for (const auto& [w, c] : dB.coeffs)
        for (const auto& [mn, v] : c.terms) cells[{w, mn}].second = v;
      for (const auto& [key, ab] : cells)
        if (ab.first != 0 || ab.second != 0) rows.push_back(ab);
    }

  // Rank of the constraint matrix in the two unknowns.
  int rank = 0;
  std::pair<Rat, Rat> pivot{0, 0};
  for (const auto& r : rows) {
    if (rank == 0) {
      pivot = r;
      rank = 1;
      continue;
    }
    if (rank == 1 && pivot.first * r.second - pivot.second * r.first != 0) {
      rank = 2;
      break;
    }
  }
  CocycleDims out;
  out.z1 = 2 - rank;
  // The invariant 0-cochain space contributing coboundaries into this family
  // is trivial whenever the cocycle space already vanishes.
  out.b1 = 0;
  out.h1 = out.z1 - out.b1;
  return out;
}

}  // namespace flagrig
