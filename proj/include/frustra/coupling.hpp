#pragma once

#include "frustra/types.hpp"

#include <string>

namespace frustra {

enum class BondClass { Single, Double, Uniform };

std::string to_string(BondClass cls);
BondClass bond_class_from_string(const std::string& name);

/// Nearest-neighbour exchange model. J > 0 is antiferromagnetic; S is the
/// classical spin length. Per-class multipliers scale J on single and double
/// bonds; uniform bonds always carry weight 1.
class CouplingModel {
 public:
  CouplingModel() = default;
  CouplingModel(double j, double s, double single_multiplier = 1.0, double double_multiplier = 1.0)
      : j_(j), s_(s), single_(single_multiplier), double_(double_multiplier) {
    if (!(j_ > 0.0)) throw DomainError("coupling J must be positive");
    if (!(s_ > 0.0)) throw DomainError("spin magnitude S must be positive");
    if (!(single_ > 0.0) || !(double_ > 0.0))
      throw DomainError("bond-class multipliers must be positive");
  }

  static CouplingModel uniform(double j = 1.0, double s = 1.0) { return {j, s}; }

  // delta = (J_double - J_single) / J_single
  static CouplingModel with_anisotropy(double delta, double j = 1.0, double s = 1.0) {
    return {j, s, 1.0, 1.0 + delta};
  }

  double j() const { return j_; }
  double s() const { return s_; }
  double single_multiplier() const { return single_; }
  double double_multiplier() const { return double_; }

  // Energy scale J S^2 that multiplies every dot-product sum.
  double scale() const { return j_ * s_ * s_; }

  double weight(BondClass cls) const {
    switch (cls) {
      case BondClass::Single: return single_;
      case BondClass::Double: return double_;
      case BondClass::Uniform: return 1.0;
    }
    return 1.0;
  }

 private:
  double j_ = 1.0;
  double s_ = 2.0;
  double single_ = 1.0;
  double double_ = 1.0;
};

}  // namespace frustra
