#ifndef TAUTLINE_ATOMIC_MEASURE_HPP
#define TAUTLINE_ATOMIC_MEASURE_HPP

#include <cstddef>
#include <vector>

namespace tautline {

// Signed measure made of finitely many point masses at strictly increasing
// interior locations. Zero masses are dropped at construction.
class AtomicMeasure {
 public:
  struct Atom {
    double location;
    double mass;
  };

  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  // Total variation |mu|(I) = sum of |mass|.
  double total_variation_mass() const;

  // Mass at an exact location, 0 if no atom sits there.
  double mass_at(double location) const;

 private:
  std::vector<Atom> atoms_;
};

// Positive and negative variations: mu = plus - minus, both nonnegative with
// disjoint supports (Jordan decomposition).
struct JordanDecomposition {
  AtomicMeasure plus;
  AtomicMeasure minus;
};
JordanDecomposition jordan_decomposition(const AtomicMeasure& mu);

}  // namespace tautline

#endif  // TAUTLINE_ATOMIC_MEASURE_HPP
