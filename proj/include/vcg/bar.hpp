#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vcg/coefficients.hpp"
#include "vcg/group.hpp"
#include "vcg/int_matrix.hpp"
#include "vcg/lattice.hpp"

namespace vcg {

enum class Assembly { Serial, Parallel };

// Normalized bar cochains C^n = Map((G∖1)^n, M) with
//   (δf)(g_1,…,g_{n+1}) = g_1·f(g_2,…) + Σ_i (−1)^i f(…, g_i g_{i+1}, …) + (−1)^{n+1} f(g_1,…,g_n).
// An n-cell is a tuple of non-identity element indices, coded in base |G|−1 (first entry most significant).
class BarComplex {
 public:
  BarComplex(const FiniteGroup& g, Coefficients m);

  const FiniteGroup& group() const { return group_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::uint64_t cells(int n) const;
  std::vector<std::uint32_t> decode(std::uint64_t code, int n) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& t) const;

  // Row of d^n at an (n+1)-cell: merged (n-cell, coefficient) pairs, nonzero (mod the coefficient modulus).
  std::vector<std::pair<std::uint64_t, Integer>> coboundary_row(int n, std::uint64_t code) const;
  IntMatrix coboundary(int n) const;

  // Matching by word length over the standard generators: an entry of length ≥ 2 at an even position
  // is split off, a designated (generator, parent) pair there is merged. Pairs need a unit coefficient.
  enum class Match { Critical, Up, Down };
  struct Partner {
    Match kind = Match::Critical;
    std::uint64_t code = 0;
    int pos = 0;
    int length = 0;  // word length of the split element
  };
  Partner partner(int n, std::uint64_t code) const;
  // No directed cycle σ → (faces of partner(σ)) among the n-cells matched upward.
  bool certify_acyclic(int n) const;

  struct Reduced {
    IntMatrix d;                       // critical rows × critical columns
    std::vector<std::uint64_t> rows;   // (n+1)-cell codes
    std::vector<std::uint64_t> cols;   // n-cell codes
    std::size_t pivots = 0;
  };
  // d^n with matched cells removed: rows of upward-matched (n+1)-cells and columns of downward-matched
  // n-cells dropped, (n, n+1) pairs eliminated. Throws std::domain_error if a pivot is not a unit.
  Reduced morse_coboundary(int n, Assembly assembly) const;

  struct Cohomology {
    Subquotient sq;
    std::vector<std::uint64_t> basis;  // the n-cells indexing the cocycle vectors of sq
    bool morse = true;
    std::size_t pivots = 0;
  };
  // H^n(G; M). Uses the Morse reduction when certified, otherwise unit-pivot elimination on full matrices.
  Cohomology cohomology(int n, Assembly assembly = Assembly::Parallel, bool allow_morse = true) const;

 private:
  // Unmerged faces with small coefficients.
  std::vector<std::pair<std::uint64_t, std::int64_t>> faces(const std::vector<std::uint32_t>& t) const;
  Integer pair_entry(const std::vector<std::uint32_t>& tau, std::uint64_t sigma) const;
  bool designated(std::uint32_t s, std::uint32_t h) const;
  Cohomology generic_cohomology(int n) const;

  FiniteGroup group_;
  Coefficients coeffs_;
  std::uint64_t q_;
  std::vector<int> len_;
  std::vector<std::uint32_t> sgen_, par_;
};

}  // namespace vcg
