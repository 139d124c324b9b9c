#pragma once

#include <cstddef>
#include <vector>

#include "vcg/finab.hpp"
#include "vcg/int_matrix.hpp"

namespace vcg {

// U·A·V = D with U, V unimodular and D diagonal, nonnegative, d_t | d_{t+1}.
struct SnfResult {
  IntMatrix U, D, V;
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

enum SnfWant : unsigned {
  kWantU = 1u,
  kWantV = 2u,
  kWantUinv = 4u,
  kWantVinv = 8u,
};

// Dense workhorse; transforms not requested are left empty.
struct DenseSnf {
  DenseMatrix U, V, Uinv, Vinv;
  std::vector<Integer> diag;  // length min(rows, cols), zeros trailing
  std::size_t rank = 0;
};

DenseSnf smith_dense(DenseMatrix a, unsigned want);

// Invariant factors (including ones, excluding zeros) and rank; sparse-aware.
struct Invariants {
  std::size_t rank = 0;
  std::vector<Integer> factors;
};
Invariants invariant_factors(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Z^rows / column-span(A).
FinAb cokernel_invariants(const IntMatrix& a);

// Columns form a Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace vcg
