#pragma once

#include "fixedloci/cone.hpp"
#include "fixedloci/weighted_action.hpp"

namespace fixedloci {

/// Limit cone of a support S: all cocharacters eta with <chi_s, eta> >= 0 for
/// s in pr(S), i.e. the eta for which lim_{z->0} eta(z) v exists.
RationalCone limit_cone(const WeightedAction& a, const SupportSet& s);

/// cone(chi_s : s in pr(S)) in the character space; its dual is limit_cone.
RationalCone weight_cone(const WeightedAction& a, const SupportSet& s);

/// Semi-stability of a support. The limit cone lies in theta^∨ exactly when
/// theta pairs nonnegatively with every eta in it, i.e. when theta lies in the
/// double dual of the weight cone, which is the weight cone itself.
bool is_semistable_support(const WeightedAction& a, const SupportSet& s);

/// Stability of a support: the weight cone is full-dimensional and theta is
/// in its interior.
bool is_stable_support(const WeightedAction& a, const SupportSet& s);

/// Identity inner product on cocharacters of G.
IntMatrix default_inner_product(std::size_t rank);

/// Throws ValidationError unless q is symmetric, integral and positive definite.
void validate_inner_product(const IntMatrix& q, std::size_t rank);

/// Kempf's m-value in exact form. m itself is usually irrational, so it is
/// reported as sign(m) and m^2.
struct KempfValue {
  int sign = 0;            // -1, 0 or +1
  Rational m_squared = 0;  // meaningless when infinite
  bool infinite = false;   // limit cone is {0}: the infimum is over an empty set
};

KempfValue m_value(const WeightedAction& a, const SupportSet& s, const IntMatrix& q);

/// Primitive cocharacter on the unique optimal ray. Throws NotUnstable when
/// m >= 0, since the optimal ray need not be unique there.
IntVec adapted_one_ps(const WeightedAction& a, const SupportSet& s, const IntMatrix& q);

}  // namespace fixedloci
