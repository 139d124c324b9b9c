#pragma once

#include <optional>
#include <vector>

#include "vcg/finab.hpp"
#include "vcg/int_matrix.hpp"
#include "vcg/smith.hpp"

namespace vcg {

// ker(d_out) / im(d_in), or with modulus m > 0 the cohomology of the complex tensored with Z/m.
class Subquotient {
 public:
  const FinAb& group() const { return group_; }
  // One cocycle per generator: torsion generators in invariant-factor order, then free ones.
  const std::vector<std::vector<Integer>>& lifts() const { return lifts_; }
  // Order of each generator, 0 for infinite.
  const std::vector<Integer>& orders() const { return orders_; }
  std::size_t ambient_dim() const { return ambient_; }
  // Class of a cocycle in generator coordinates, reduced modulo finite orders.
  // Throws ComplexError if z is not a cocycle.
  std::vector<Integer> coordinates(const std::vector<Integer>& z) const;

  friend Subquotient subquotient(const IntMatrix& d_out, const IntMatrix& d_in, const Integer& modulus);

 private:
  FinAb group_;
  std::vector<std::vector<Integer>> lifts_;
  std::vector<Integer> orders_;
  std::size_t ambient_ = 0;
  IntMatrix d_out_;
  Integer modulus_;
  DenseMatrix coord_;              // lattice coordinates: (coord_ x)_t / coord_div_[t]
  std::vector<Integer> coord_div_;
  DenseMatrix quot_;               // quotient coordinates from lattice coordinates
  std::vector<std::size_t> kept_;  // rows of quot_ that carry a generator
};

Subquotient subquotient(const IntMatrix& d_out, const IntMatrix& d_in, const Integer& modulus = 0);

// Throws ComplexError naming the first nonzero entry of d_out·d_in (mod modulus).
void check_complex(const IntMatrix& d_out, const IntMatrix& d_in, const Integer& modulus = 0);

// For the homomorphism Z^k/(src orders) → Z^l/(dst orders) whose columns are the images of the
// generators (order 0 = free generator): its kernel and cokernel.
FinAb hom_kernel(const IntMatrix& m, const std::vector<Integer>& src_orders, const std::vector<Integer>& dst_orders);
FinAb hom_cokernel(const IntMatrix& m, const std::vector<Integer>& dst_orders);

// LLL reduction (δ = 3/4) of linearly independent integer vectors, in place; the lattice is unchanged.
// Throws std::invalid_argument on dependent input.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

// Repeated integer solves A x = b against a fixed A.
class LinearSolver {
 public:
  explicit LinearSolver(const IntMatrix& a);
  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;
  std::size_t rank() const { return snf_.rank; }

 private:
  std::size_t rows_, cols_;
  DenseSnf snf_;
};

}  // namespace vcg
