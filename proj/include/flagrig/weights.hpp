#pragma once

// Root-system arithmetic for gl_m + gl_n (type A x A): positive roots,
// doubled half-sum, Bott index / singularity, dot action, Weyl dimension.
// All shifted weights are kept in doubled coordinates so the half-sum of
// positive roots never forces rational entries.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagrig {

using BigInt = boost::multiprecision::cpp_int;

struct Weight {
  std::vector<int> mu;  // length m
  std::vector<int> la;  // length n

  bool operator==(const Weight& o) const { return mu == o.mu && la == o.la; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // Lexicographic on the concatenated coordinate vector.
  bool operator<(const Weight& o) const {
    if (mu != o.mu) return mu < o.mu;
    return la < o.la;
  }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight negate(const Weight& w);
Weight zero_weight(int m, int n);
bool is_zero(const Weight& w);
std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int v : w.mu) mix(static_cast<std::size_t>(v + (1 << 20)));
    mix(0xabcdull);
    for (int v : w.la) mix(static_cast<std::size_t>(v + (1 << 20)));
    return h;
  }
};

struct RootData {
  int m = 0;
  int n = 0;
  std::vector<Weight> positive_roots;  // mu-roots lexicographically, then la-roots
  std::vector<Weight> simple_roots;
  Weight two_zeta;  // doubled coordinates: mu part m-2i+1, la part n-2j+1
};

RootData build_root_data(int m, int n);

long long pairing(const Weight& a, const Weight& b);

enum class BottKind { Singular, Regular };

struct BottClass {
  BottKind kind = BottKind::Singular;
  int index = -1;               // defined when Regular
  Weight dominant_shifted2;     // sorted-descending 2(w + zeta)
  Weight dot_image;             // w.L = w(L+zeta)-zeta, defined when Regular
};

BottClass classify(const Weight& w, const RootData& rd);

bool is_dominant(const Weight& w);

// Product Weyl dimension formula over both blocks; exact integer arithmetic.
BigInt weyl_dim(const Weight& w, const RootData& rd);

struct FlagrigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flagrig
