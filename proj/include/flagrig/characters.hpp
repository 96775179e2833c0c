#pragma once

// Formal character algebra for a product of GL blocks: sparse weight
// multisets with dual / tensor / exterior-power operations, irreducible
// characters via Gelfand-Tsetlin pattern enumeration, and decomposition
// into irreducibles by highest-weight peeling.

#include "flagrig/weights.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace flagrig {

// Sizes of the GL blocks partitioning the mu and lambda coordinates.
// Block i of the mu part carries the standard representation rho_i,
// block i of the lambda part carries sigma_i.
struct BlockStructure {
  int m = 0;
  int n = 0;
  std::vector<int> mu_blocks;
  std::vector<int> lambda_blocks;

  bool operator==(const BlockStructure& o) const {
    return m == o.m && n == o.n && mu_blocks == o.mu_blocks &&
           lambda_blocks == o.lambda_blocks;
  }
  // Offset of block i (0-based) into the mu / lambda coordinates.
  int mu_offset(int i) const;
  int lambda_offset(int i) const;
};

using Character = std::unordered_map<Weight, BigInt, WeightHash>;

BigInt dimension(const Character& c);
Character dual(const Character& c);
Character tensor(const Character& a, const Character& b);
Character wedge(const Character& c, int q);
Character direct_sum(const Character& a, const Character& b);
Character trivial_character(int m, int n);

// Weight multiset of the irreducible R-module with the given per-block
// dominant highest weight (product of per-block GT enumerations).
Character irr_char(const BlockStructure& bs, const Weight& hw);

BigInt irr_dim(const BlockStructure& bs, const Weight& hw);

struct IrrDecomposition {
  std::vector<std::pair<Weight, BigInt>> constituents;  // (highest weight, mult)
};

bool is_block_dominant(const BlockStructure& bs, const Weight& w);

// Highest-weight peeling; throws FlagrigError if the input is not a genuine
// character of the block-reductive group.
IrrDecomposition decompose(const BlockStructure& bs, const Character& c);

}  // namespace flagrig
