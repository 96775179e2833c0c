#include "flagrig/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flagrig {

namespace {

// Binomial coefficient, exact.
BigInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

using BlockChar = std::map<std::vector<int>, BigInt>;

// Gelfand-Tsetlin enumeration for a single GL_k block.
// rows[k-1] = top row; weight coordinate t = sum(row_t) - sum(row_{t-1}).
void gt_rows(const std::vector<int>& upper, std::vector<int>& lower, int pos,
             long long upper_sum, long long acc_weight_tail,
             std::vector<int>& weight, BlockChar& out) {
  int k = static_cast<int>(upper.size());
  if (pos == k - 1) {
    long long lower_sum =
        std::accumulate(lower.begin(), lower.end(), 0ll);
    weight[k - 1] = static_cast<int>(upper_sum - lower_sum);
    if (k - 1 == 0) {
      // unreachable: handled by caller
    }
    if (static_cast<int>(lower.size()) == 1) {
      weight[0] = lower[0];
      out[weight] += 1;
      return;
    }
    std::vector<int> next(lower.size() - 1);
    gt_rows(lower, next, 0, lower_sum, 0, weight, out);
    return;
  }
  int hi = upper[pos];
  int lo = upper[pos + 1];
  for (int v = lo; v <= hi; ++v) {
    lower[pos] = v;
    gt_rows(upper, lower, pos + 1, upper_sum, acc_weight_tail, weight, out);
  }
  (void)acc_weight_tail;
}

BlockChar block_irr_char(const std::vector<int>& hw) {
  BlockChar out;
  int k = static_cast<int>(hw.size());
  if (k == 0) {
    out[{}] = 1;
    return out;
  }
  if (k == 1) {
    out[hw] = 1;
    return out;
  }
  std::vector<int> weight(k, 0);
  std::vector<int> lower(k - 1);
  long long top_sum = std::accumulate(hw.begin(), hw.end(), 0ll);
  gt_rows(hw, lower, 0, top_sum, 0, weight, out);
  return out;
}

BigInt block_weyl_dim(const std::vector<int>& hw) {
  int k = static_cast<int>(hw.size());
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= hw[i] - hw[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::vector<std::vector<int>> split_blocks(const std::vector<int>& coords,
                                           const std::vector<int>& sizes) {
  std::vector<std::vector<int>> parts;
  int off = 0;
  for (int s : sizes) {
    parts.emplace_back(coords.begin() + off, coords.begin() + off + s);
    off += s;
  }
  return parts;
}

struct IrrKey {
  BlockStructure bs;
  Weight hw;
  bool operator<(const IrrKey& o) const {
    if (bs.mu_blocks != o.bs.mu_blocks) return bs.mu_blocks < o.bs.mu_blocks;
    if (bs.lambda_blocks != o.bs.lambda_blocks)
      return bs.lambda_blocks < o.bs.lambda_blocks;
    return hw < o.hw;
  }
};

}  // namespace

int BlockStructure::mu_offset(int i) const {
  int off = 0;
  for (int t = 0; t < i; ++t) off += mu_blocks[t];
  return off;
}

int BlockStructure::lambda_offset(int i) const {
  int off = 0;
  for (int t = 0; t < i; ++t) off += lambda_blocks[t];
  return off;
}

BigInt dimension(const Character& c) {
  BigInt d = 0;
  for (const auto& [w, mult] : c) d += mult;
  return d;
}

Character dual(const Character& c) {
  Character r;
  for (const auto& [w, mult] : c) r[negate(w)] += mult;
  return r;
}

Character tensor(const Character& a, const Character& b) {
  Character r;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) r[wa + wb] += ma * mb;
  return r;
}

Character direct_sum(const Character& a, const Character& b) {
  Character r = a;
  for (const auto& [w, mult] : b) {
    r[w] += mult;
    if (r[w] == 0) r.erase(w);
  }
  return r;
}

Character trivial_character(int m, int n) {
  Character r;
  r[zero_weight(m, n)] = 1;
  return r;
}

Character wedge(const Character& c, int q) {
  if (q < 0) return {};
  if (c.empty()) {
    Character r;
    if (q == 0 && !c.empty()) return r;
    return {};
  }
  int m = static_cast<int>(c.begin()->first.mu.size());
  int n = static_cast<int>(c.begin()->first.la.size());
  // dp[j] = character of wedge^j over the weights processed so far.
  std::vector<Character> dp(q + 1);
  dp[0][zero_weight(m, n)] = 1;
  for (const auto& [w, mult] : c) {
    // A weight space of dimension d contributes C(d,t) copies of t*w.
    long long d = mult.convert_to<long long>();
    for (int j = q; j >= 1; --j) {
      Character add;
      Weight tw = zero_weight(m, n);
      for (int t = 1; t <= j && t <= d; ++t) {
        tw = tw + w;
        BigInt cnt = binom(d, t);
        for (const auto& [u, mu_] : dp[j - t]) add[u + tw] += mu_ * cnt;
      }
      for (const auto& [u, mu_] : add) dp[j][u] += mu_;
    }
  }
  return dp[q];
}

Character irr_char(const BlockStructure& bs, const Weight& hw) {
  if (!is_block_dominant(bs, hw))
    throw FlagrigError("irr_char: highest weight not dominant per block");
  thread_local std::map<IrrKey, Character> cache;
  IrrKey key{bs, hw};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<BlockChar> parts;
  for (auto& blk : split_blocks(hw.mu, bs.mu_blocks))
    parts.push_back(block_irr_char(blk));
  for (auto& blk : split_blocks(hw.la, bs.lambda_blocks))
    parts.push_back(block_irr_char(blk));

  // Cartesian product across blocks, assembled into full-length weights.
  std::vector<std::pair<std::vector<int>, BigInt>> acc;
  acc.push_back({{}, 1});
  for (const auto& part : parts) {
    std::vector<std::pair<std::vector<int>, BigInt>> next;
    next.reserve(acc.size() * part.size());
    for (const auto& [prefix, cm] : acc)
      for (const auto& [blockw, cb] : part) {
        std::vector<int> joined = prefix;
        joined.insert(joined.end(), blockw.begin(), blockw.end());
        next.push_back({std::move(joined), cm * cb});
      }
    acc = std::move(next);
  }
  Character out;
  for (auto& [coords, mult] : acc) {
    Weight w;
    w.mu.assign(coords.begin(), coords.begin() + bs.m);
    w.la.assign(coords.begin() + bs.m, coords.end());
    out[w] += mult;
  }
  cache[key] = out;
  return out;
}

BigInt irr_dim(const BlockStructure& bs, const Weight& hw) {
  BigInt d = 1;
  for (auto& blk : split_blocks(hw.mu, bs.mu_blocks)) d *= block_weyl_dim(blk);
  for (auto& blk : split_blocks(hw.la, bs.lambda_blocks))
    d *= block_weyl_dim(blk);
  return d;
}

bool is_block_dominant(const BlockStructure& bs, const Weight& w) {
  for (auto& blk : split_blocks(w.mu, bs.mu_blocks))
    for (std::size_t i = 1; i < blk.size(); ++i)
      if (blk[i - 1] < blk[i]) return false;
  for (auto& blk : split_blocks(w.la, bs.lambda_blocks))
    for (std::size_t i = 1; i < blk.size(); ++i)
      if (blk[i - 1] < blk[i]) return false;
  return true;
}

IrrDecomposition decompose(const BlockStructure& bs, const Character& c) {
  std::map<Weight, BigInt> rest(c.begin(), c.end());
  for (auto it = rest.begin(); it != rest.end();) {
    if (it->second == 0)
      it = rest.erase(it);
    else
      ++it;
  }
  IrrDecomposition dec;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());  // lexicographically greatest weight
    Weight hw = top->first;
    BigInt mult = top->second;
    if (mult < 0)
      throw FlagrigError("decompose: negative multiplicity, not a character");
    if (!is_block_dominant(bs, hw))
      throw FlagrigError(
          "decompose: lex-max weight not per-block dominant, not a character");
    dec.constituents.push_back({hw, mult});
    Character ic = irr_char(bs, hw);
    for (const auto& [w, im] : ic) {
      auto jt = rest.find(w);
      if (jt == rest.end()) {
        if (im * mult != 0)
          throw FlagrigError("decompose: negative multiplicity (missing weight)");
        continue;
      }
      jt->second -= im * mult;
      if (jt->second == 0)
        rest.erase(jt);
      else if (jt->second < 0)
        throw FlagrigError("decompose: negative multiplicity, not a character");
    }
  }
  return dec;
}

}  // namespace flagrig
