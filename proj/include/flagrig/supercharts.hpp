#pragma once

// Symbolic coordinate-level oracle: supercommutative polynomial algebra over
// exact rationals, the matrix charts Z_I of a flag supermanifold, transition
// maps, fundamental vector fields of the GL_{m|n} action, and the vertical
// cocycle computation that kills the (2,2) bigraded tangent cohomology.

#include "flagrig/flag_geometry.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace flagrig {

using Rat = boost::multiprecision::cpp_rational;

// Canonical monomial: even part as sorted (var,exponent) pairs, odd part as a
// sorted set of variable ids (odd variables square to zero).
struct Monomial {
  std::vector<std::pair<int, int>> even;
  std::vector<int> odd;
  bool operator<(const Monomial& o) const {
    if (even != o.even) return even < o.even;
    return odd < o.odd;
  }
  bool operator==(const Monomial& o) const {
    return even == o.even && odd == o.odd;
  }
};

struct SuperPoly {
  std::map<Monomial, Rat> terms;

  bool zero() const { return terms.empty(); }
  bool operator==(const SuperPoly& o) const { return terms == o.terms; }
};

SuperPoly sp_const(const Rat& c);
SuperPoly sp_var(int id, bool odd);
SuperPoly operator+(const SuperPoly& a, const SuperPoly& b);
SuperPoly operator-(const SuperPoly& a, const SuperPoly& b);
SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
SuperPoly sp_scale(const SuperPoly& a, const Rat& c);

struct VarInfo {
  std::string name;
  bool odd = false;
  int s = 0;    // chart level (1-based); 0 for auxiliary parameters
  int row = 0;  // position inside its matrix block
  int col = 0;
  int pdeg = 0;  // odd degree (1 for odd variables)
  int qdeg = 0;  // base-odd degree (1 for s=1 odd variables)
};

// Row index sets carrying the embedded identity, one per chart level.
struct ChartIndexSet {
  std::vector<std::vector<int>> even_rows;  // 0-based, sorted, size k_s
  std::vector<std::vector<int>> odd_rows;   // size l_s
};

ChartIndexSet standard_chart_index(const FlagType& ft);

using Mat = std::vector<std::vector<SuperPoly>>;

struct Chart {
  FlagType ft;
  ChartIndexSet index;
  std::vector<VarInfo> vars;  // ids are indices into this vector
  std::vector<Mat> Z;         // Z[s-1] is the (k_{s-1}+l_{s-1}) x (k_s+l_s) chart matrix

  int var_count() const { return static_cast<int>(vars.size()); }
  // Lookup of the free-variable id at matrix position (s, row, col); -1 if
  // the position lies in an identity row.
  int var_at(int s, int row, int col) const;
};

Chart build_chart(const FlagType& ft, const ChartIndexSet& I);

// Left partial derivative with respect to a variable.
SuperPoly sp_derivative(const SuperPoly& f, int var, const Chart& chart);

struct Derivation {
  bool odd = false;
  std::map<int, SuperPoly> coeffs;  // var id -> coefficient polynomial

  bool zero() const;
};

SuperPoly apply(const Derivation& d, const SuperPoly& f, const Chart& chart);
Derivation d_add(const Derivation& a, const Derivation& b);
Derivation d_scale(const Derivation& a, const Rat& c);
Derivation bracket(const Derivation& u, const Derivation& v, const Chart& chart);

// Component of the given bidegree (odd-degree, base-odd-degree) of a field,
// i.e. the part surviving on the bigraded retract.
Derivation project_bidegree(const Derivation& d, int p, int q, const Chart& chart);

// Part with coefficients on fiber (s >= 2) coordinate directions.
Derivation vertical_part(const Derivation& d, const Chart& chart);

// Fundamental vector field of the one-parameter flow through L in gl_{m|n}.
// L is a dense (m+n) x (m+n) rational matrix; odd_part selects the parity
// component of L that acts (mixed L must be split by the caller).
Derivation fundamental_field(const Chart& chart, const std::vector<std::vector<Rat>>& L,
                             bool odd_part);

// Rational expression num/den with an even, odd-variable-free denominator.
struct SuperRat {
  SuperPoly num;
  SuperPoly den;
};

bool sr_equal(const SuperRat& a, const SuperRat& b);

// Coordinates of chart J expressed in the coordinates of chart I;
// keys are the variable ids of build_chart(ft, J).
struct TransitionMap {
  std::map<int, SuperRat> subst;
};

TransitionMap transition(const FlagType& ft, const ChartIndexSet& I,
                         const ChartIndexSet& J);

// Substitute a transition map (expressions in I-coordinates) into a
// polynomial in J-coordinates.
SuperRat substitute(const SuperPoly& f, const TransitionMap& tm,
                    const Chart& source_of_f);

struct CocycleDims {
  int z1 = 0;
  int b1 = 0;
  int h1 = 0;
};

// Solves (delta c)(x,y) = 0 over the two-parameter invariant cochain family
// for the (2,2) bigraded tangent values; requires r >= 2.
CocycleDims vertical_cocycle_dim(const FlagType& ft);

}  // namespace flagrig
