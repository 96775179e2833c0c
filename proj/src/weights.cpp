#include "flagrig/weights.hpp"

#include <algorithm>
#include <sstream>

namespace flagrig {

namespace {

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw FlagrigError("weight size mismatch");
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> sub_vec(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw FlagrigError("weight size mismatch");
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Sorts v descending, returns the number of inversions removed.
// Returns -1 if a repeated entry is found (singular case).
long long sort_desc_count_inversions(std::vector<int>& v) {
  long long inv = 0;
  // Desk-scale vectors (m, n <= ~8): insertion sort is fine and exact.
  for (std::size_t i = 1; i < v.size(); ++i) {
    int x = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] < x) {
      v[j] = v[j - 1];
      --j;
      ++inv;
    }
    v[j] = x;
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return -1;
  return inv;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  return Weight{add_vec(a.mu, b.mu), add_vec(a.la, b.la)};
}

Weight operator-(const Weight& a, const Weight& b) {
  return Weight{sub_vec(a.mu, b.mu), sub_vec(a.la, b.la)};
}

Weight negate(const Weight& w) {
  Weight r = w;
  for (int& v : r.mu) v = -v;
  for (int& v : r.la) v = -v;
  return r;
}

Weight zero_weight(int m, int n) {
  return Weight{std::vector<int>(m, 0), std::vector<int>(n, 0)};
}

bool is_zero(const Weight& w) {
  auto all0 = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return all0(w.mu) && all0(w.la);
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.mu.size(); ++i) {
    if (i) os << ',';
    os << w.mu[i];
  }
  os << '|';
  for (std::size_t i = 0; i < w.la.size(); ++i) {
    if (i) os << ',';
    os << w.la[i];
  }
  os << ')';
  return os.str();
}

RootData build_root_data(int m, int n) {
  if (m < 1) throw FlagrigError("build_root_data: m must be >= 1");
  if (n < 0) throw FlagrigError("build_root_data: n must be >= 0");
  RootData rd;
  rd.m = m;
  rd.n = n;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Weight r = zero_weight(m, n);
      r.mu[i] = 1;
      r.mu[j] = -1;
      rd.positive_roots.push_back(r);
      if (j == i + 1) rd.simple_roots.push_back(r);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight r = zero_weight(m, n);
      r.la[i] = 1;
      r.la[j] = -1;
      rd.positive_roots.push_back(r);
      if (j == i + 1) rd.simple_roots.push_back(r);
    }
  rd.two_zeta = zero_weight(m, n);
  for (int i = 0; i < m; ++i) rd.two_zeta.mu[i] = m - 2 * (i + 1) + 1;
  for (int j = 0; j < n; ++j) rd.two_zeta.la[j] = n - 2 * (j + 1) + 1;
  return rd;
}

long long pairing(const Weight& a, const Weight& b) {
  if (a.mu.size() != b.mu.size() || a.la.size() != b.la.size())
    throw FlagrigError("pairing: size mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.mu.size(); ++i)
    s += static_cast<long long>(a.mu[i]) * b.mu[i];
  for (std::size_t i = 0; i < a.la.size(); ++i)
    s += static_cast<long long>(a.la[i]) * b.la[i];
  return s;
}

BottClass classify(const Weight& w, const RootData& rd) {
  if (static_cast<int>(w.mu.size()) != rd.m ||
      static_cast<int>(w.la.size()) != rd.n)
    throw FlagrigError("classify: size mismatch");
  BottClass bc;
  std::vector<int> smu(rd.m), sla(rd.n);
  for (int i = 0; i < rd.m; ++i) smu[i] = 2 * w.mu[i] + rd.two_zeta.mu[i];
  for (int j = 0; j < rd.n; ++j) sla[j] = 2 * w.la[j] + rd.two_zeta.la[j];
  long long inv_mu = sort_desc_count_inversions(smu);
  long long inv_la = sort_desc_count_inversions(sla);
  bc.dominant_shifted2 = Weight{smu, sla};
  if (inv_mu < 0 || inv_la < 0) {
    bc.kind = BottKind::Singular;
    return bc;
  }
  bc.kind = BottKind::Regular;
  bc.index = static_cast<int>(inv_mu + inv_la);
  bc.dot_image = zero_weight(rd.m, rd.n);
  for (int i = 0; i < rd.m; ++i)
    bc.dot_image.mu[i] = (smu[i] - rd.two_zeta.mu[i]) / 2;
  for (int j = 0; j < rd.n; ++j)
    bc.dot_image.la[j] = (sla[j] - rd.two_zeta.la[j]) / 2;
  return bc;
}

bool is_dominant(const Weight& w) {
  for (std::size_t i = 1; i < w.mu.size(); ++i)
    if (w.mu[i - 1] < w.mu[i]) return false;
  for (std::size_t i = 1; i < w.la.size(); ++i)
    if (w.la[i - 1] < w.la[i]) return false;
  return true;
}

BigInt weyl_dim(const Weight& w, const RootData& rd) {
  if (!is_dominant(w)) throw FlagrigError("weyl_dim: weight not dominant");
  BigInt num = 1, den = 1;
  auto accumulate = [&](const std::vector<int>& wp, const std::vector<int>& zp) {
    int k = static_cast<int>(wp.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        num *= 2 * (wp[i] - wp[j]) + (zp[i] - zp[j]);
        den *= zp[i] - zp[j];
      }
  };
  accumulate(w.mu, rd.two_zeta.mu);
  accumulate(w.la, rd.two_zeta.la);
  if (den == 0 || num % den != 0)
    throw FlagrigError("weyl_dim: non-exact division (internal bug)");
  return num / den;
}

}  // namespace flagrig
