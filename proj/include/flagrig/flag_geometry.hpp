#pragma once

// Flag types, validity of the standing assumptions, the block structure of
// the reductive part R, the named fiber representations (phi, psi, theta,
// tau and the v/h parts), and the base/fiber split with its pushforward
// representation data.

#include "flagrig/characters.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagrig {

struct FlagType {
  int m = 0;
  int n = 0;
  std::vector<int> k;  // k[0] = m, strictly decreasing, k[r] > 0
  std::vector<int> l;  // l[0] = n

  int r() const { return static_cast<int>(k.size()) - 1; }
  bool operator==(const FlagType& o) const {
    return m == o.m && n == o.n && k == o.k && l == o.l;
  }
  std::string to_string() const;
};

struct ValidatedFlagType {
  FlagType ft;
  bool generic = false;
  bool admissible = false;
  std::string violation;  // human-readable reason when a flag fails
};

ValidatedFlagType validate_flag_type(const FlagType& ft);

BlockStructure reductive_blocks(const FlagType& ft);

enum class RepId { Phi, Psi, Theta, Tau, TauV, TauH, Nilradical, NilradicalB };

struct NamedRep {
  RepId id;
  Character character;
};

NamedRep named_rep(const FlagType& ft, RepId id);

// Odd dimension of the supermanifold: dim theta.
long long odd_dimension(const FlagType& ft);

// chi characters of the pushforward bundles over the base, given in the
// base's block structure (bundle fibers of the direct images at p-q = -1, 0).
struct PushforwardData {
  Character chi_A_m1;  // A-family, p-q = -1: dual(rho2) x sigma2 + rho2 x dual(sigma2)
  Character chi_A_0;   // A-family, p-q = 0: trivial + trivial
  Character chi_C_0;   // C-family, p-q = 0: traceless adjoints of both blocks
  Character chi_T_m1;  // T-family, p-q = -1 (same as A-family)
  Character chi_T_0;   // T-family, p-q = 0: traceless adjoints + trivial + trivial
  Character phi_B;     // phi of the base super-grassmannian
};

struct BaseFiberSplit {
  FlagType base;   // F^{m|n}_{k1|l1}
  FlagType fiber;  // F^{k1|l1}_{(k1..kr)|(l1..lr)}
  PushforwardData push;
};

BaseFiberSplit base_fiber_split(const FlagType& ft);  // requires r >= 2

enum class Family { O, Av, Ah, A, Cv, Ch, C, Tv, Th, T };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
bool family_is_graded_vh(Family f);   // one of Av/Ah/Cv/Ch/Tv/Th
bool family_is_ungraded(Family f);    // one of O/A/C/T

// N_q * dim H0(fiber) rank of the direct image sheaf; requires r >= 2.
BigInt pushforward_rank(const FlagType& ft, Family family, int p, int q);

}  // namespace flagrig
