#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vcg/coefficients.hpp"
#include "vcg/group.hpp"
#include "vcg/int_matrix.hpp"
#include "vcg/lattice.hpp"

namespace vcg {

// An element of the free module ZG^r, coordinate j·|G| + g holding the coefficient of g·e_j.
using ModuleVector = std::vector<Integer>;

// A free ZG-resolution P_n = ZG^{r_n} → … → P_0 = ZG → Z computed from the multiplication table:
// each kernel is covered greedily by ZG-generators drawn from a Z-basis of it.
class FreeResolution {
 public:
  FreeResolution(const FiniteGroup& g, int top_degree);

  const FiniteGroup& group() const { return *group_; }
  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const { return ranks_.at(n); }
  // ∂_n(e_i) for n ≥ 1.
  const ModuleVector& boundary(int n, std::size_t i) const { return boundary_.at(n).at(i); }

  // g·x.
  ModuleVector act(std::uint32_t g, const ModuleVector& x) const;
  // ∂_n as a Z-linear map, columns indexed by j·|G| + g (n = 0 gives the augmentation).
  IntMatrix z_matrix(int n) const;
  // ∂_n applied to an arbitrary element of P_n.
  ModuleVector apply_boundary(int n, const ModuleVector& x) const;

  // Coboundary Hom_G(P_n, M) → Hom_G(P_{n+1}, M), an r_{n+1} × r_n matrix; needs n + 1 ≤ top_degree.
  IntMatrix cochain_differential(int n, const Coefficients& m) const;
  // H^n(G; M) with cocycles as vectors of values f(e_i); needs n + 1 ≤ top_degree.
  Subquotient cohomology(int n, const Coefficients& m) const;

  // Some y ∈ P_{n+1} with ∂y = x, for a cycle x of P_n (n ≥ 0; for n = −1 read x as an integer in Z).
  ModuleVector lift(int n, const ModuleVector& x) const;
  // Z-linear contracting homotopy h_n: P_n → P_{n+1}, ∂h + h∂ = 1 (h_{-1}(1) = e_0).
  ModuleVector homotopy(int n, const ModuleVector& x) const;

 private:
  const LinearSolver& solver(int n) const;

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<ModuleVector>> boundary_;
  mutable std::vector<std::unique_ptr<LinearSolver>> solvers_;
  mutable std::vector<std::vector<ModuleVector>> homotopy_;  // h_n on the Z-basis, filled lazily
};

// A chain map P → P over θ: τ(g·x) = θ(g)·τ(x).
class ChainLift {
 public:
  ChainLift(const FreeResolution& p, const std::vector<std::uint32_t>& theta_perm, int top_degree);
  const ModuleVector& image(int n, std::size_t i) const { return images_.at(n).at(i); }
  ModuleVector apply(int n, const ModuleVector& x) const;
  // Matrix of f ↦ f∘τ_n on Hom_G(P_n, Z) in the basis of values f(e_i).
  IntMatrix cochain_map(int n) const;

 private:
  const FreeResolution& p_;
  std::vector<std::uint32_t> perm_;
  std::vector<std::vector<ModuleVector>> images_;
};

}  // namespace vcg
