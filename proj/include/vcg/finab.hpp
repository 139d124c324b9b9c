#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vcg/integer.hpp"

namespace vcg {

// Z^free_rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}, d_t >= 2, d_1 | d_2 | ... | d_k.
class FinAb {
 public:
  FinAb() = default;
  // Canonicalizes an arbitrary list of cyclic orders; order 0 means Z, order 1 is dropped.
  static FinAb from_cyclic(const std::vector<Integer>& orders);
  static FinAb free(std::size_t rank) { return from_cyclic(std::vector<Integer>(rank, Integer(0))); }
  static FinAb cyclic(const Integer& m) { return from_cyclic({m}); }
  static FinAb zero() { return FinAb(); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  // Order of the torsion part.
  Integer torsion_order() const;

  FinAb operator+(const FinAb& other) const;
  friend bool operator==(const FinAb& a, const FinAb& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FinAb& a, const FinAb& b) { return !(a == b); }

  // "Z^2 ⊕ Z_2 ⊕ Z_4", "0" for the trivial group.
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace vcg
