#include "vcg/finab.hpp"

#include <sstream>

namespace vcg {

FinAb FinAb::from_cyclic(const std::vector<Integer>& orders) {
  FinAb g;
  std::vector<Integer> t;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.free_rank_;
    else if (abs(o) != 1)
      t.push_back(abs(o));
  }
  // Z_m ⊕ Z_n ≅ Z_gcd ⊕ Z_lcm; one sweep leaves t[i] dividing every later entry.
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g2 = gcd(t[i], t[j]), l = lcm(t[i], t[j]);
      t[i] = g2;
      t[j] = l;
    }
  for (auto& x : t)
    if (x != 1) g.torsion_.push_back(x);
  return g;
}

Integer FinAb::torsion_order() const {
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

FinAb FinAb::operator+(const FinAb& other) const {
  std::vector<Integer> all(free_rank_ + other.free_rank_, Integer(0));
  all.insert(all.end(), torsion_.begin(), torsion_.end());
  all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic(all);
}

std::string FinAb::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " ⊕ ";
    os << "Z_" << d;
    first = false;
  }
  return os.str();
}

}  // namespace vcg
