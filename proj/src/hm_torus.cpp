#include "fixedloci/hm_torus.hpp"

#include "fixedloci/errors.hpp"

namespace fixedloci {

RationalCone limit_cone(const WeightedAction& a, const SupportSet& s) {
  return RationalCone::from_inequalities(support_weights(a, s), a.g_rank());
}

RationalCone weight_cone(const WeightedAction& a, const SupportSet& s) {
  return RationalCone::from_generators(support_weights(a, s), a.g_rank());
}

bool is_semistable_support(const WeightedAction& a, const SupportSet& s) {
  return weight_cone(a, s).contains(a.theta());
}

bool is_stable_support(const WeightedAction& a, const SupportSet& s) {
  auto tau = weight_cone(a, s);
  return tau.is_fulldim() && tau.interior_contains(a.theta());
}

IntMatrix default_inner_product(std::size_t rank) { return IntMatrix::identity(rank); }

void validate_inner_product(const IntMatrix& q, std::size_t rank) {
  if (q.rows() != rank || q.cols() != rank)
    throw DimMismatch("inner product must be " + std::to_string(rank) + " x " +
                      std::to_string(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (q(i, j) != q(j, i)) throw ValidationError("inner product is not symmetric");
  // Sylvester: all leading principal minors positive.
  for (std::size_t k = 1; k <= rank; ++k) {
    IntMatrix lead = q.row_block(0, k).col_block(0, k);
    if (determinant(lead) <= 0) throw ValidationError("inner product is not positive definite");
  }
}

namespace {

// Projection of -Q^{-1} theta onto the limit cone in the Q-norm. Minimizing
// <theta, eta> / |eta|_Q over the cone is the same as minimizing
// <Q^{-1} theta, eta>_Q / |eta|_Q, whose optimum direction is that projection.
RatVec kempf_point(const WeightedAction& a, const RationalCone& cone, const RatMatrix& q) {
  auto qinv = inverse(q);
  RatVec target = qinv->apply(to_rational(a.theta()));
  for (auto& x : target) x = -x;
  return project_onto_cone(cone, target, q);
}

}  // namespace

KempfValue m_value(const WeightedAction& a, const SupportSet& s, const IntMatrix& q_int) {
  validate_inner_product(q_int, a.g_rank());
  RatMatrix q = to_rational(q_int);
  auto cone = limit_cone(a, s);
  KempfValue out;
  if (cone.is_zero()) {
    out.infinite = true;
    out.sign = 1;
    return out;
  }
  RatVec p = kempf_point(a, cone, q);
  if (!is_zero(p)) {
    out.sign = -1;
    out.m_squared = q_product(q, p, p);
    return out;
  }
  // theta is nonnegative on the cone; the minimum ratio is attained on a generator.
  bool first = true;
  for (const auto& g : cone.generators()) {
    RatVec gr = to_rational(g);
    Rational pairing = dot(a.theta(), gr);
    Rational ratio_sq = pairing * pairing / q_product(q, gr, gr);
    if (first || ratio_sq < out.m_squared) {
      out.m_squared = ratio_sq;
      first = false;
    }
  }
  out.sign = out.m_squared == 0 ? 0 : 1;
  return out;
}

IntVec adapted_one_ps(const WeightedAction& a, const SupportSet& s, const IntMatrix& q_int) {
  validate_inner_product(q_int, a.g_rank());
  RatMatrix q = to_rational(q_int);
  auto cone = limit_cone(a, s);
  RatVec p = cone.is_zero() ? RatVec(a.g_rank(), Rational(0)) : kempf_point(a, cone, q);
  if (is_zero(p)) throw NotUnstable("support is not unstable (m >= 0); adapted ray is not unique");
  return primitive(p);
}

}  // namespace fixedloci
