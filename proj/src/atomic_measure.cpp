#include "tautline/atomic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tautline/errors.hpp"

namespace tautline {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  atoms_.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& a = atoms[i];
    if (!std::isfinite(a.location) || !std::isfinite(a.mass)) {
      throw ParameterError("atom " + std::to_string(i) + " is not finite");
    }
    if (!atoms_.empty() && !(atoms_.back().location < a.location)) {
      throw ParameterError("atom locations must be strictly increasing at index " +
                           std::to_string(i));
    }
    if (a.mass != 0.0) {
      atoms_.push_back(a);
    }
  }
}

double AtomicMeasure::total_variation_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += std::abs(a.mass);
  return s;
}

double AtomicMeasure::mass_at(double location) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), location,
                             [](const Atom& a, double x) { return a.location < x; });
  if (it != atoms_.end() && it->location == location) return it->mass;
  return 0.0;
}

JordanDecomposition jordan_decomposition(const AtomicMeasure& mu) {
  std::vector<AtomicMeasure::Atom> plus, minus;
  for (const auto& a : mu.atoms()) {
    if (a.mass > 0) {
      plus.push_back(a);
    } else {
      minus.push_back({a.location, -a.mass});
    }
  }
  return {AtomicMeasure(std::move(plus)), AtomicMeasure(std::move(minus))};
}

}  // namespace tautline
