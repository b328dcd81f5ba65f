#pragma once

#include "fixedloci/numeric.hpp"

#include <optional>
#include <vector>

namespace fixedloci::lp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
  RatVec coeffs;
  Relation relation = Relation::Equal;
  Rational rhs = 0;
};

/// Exact phase-1 simplex with Bland's rule. Returns a feasible point or
/// nullopt. `nonnegative[j]` marks variables restricted to x_j >= 0; the rest
/// are free. An empty `nonnegative` means all variables are free.
std::optional<RatVec> find_feasible_point(std::size_t num_vars,
                                          const std::vector<Constraint>& constraints,
                                          const std::vector<bool>& nonnegative = {});

/// Coefficients lambda >= 0 with sum lambda_i * generators[i] = x, if any.
std::optional<RatVec> nonnegative_combination(const std::vector<IntVec>& generators,
                                              const RatVec& x);

}  // namespace fixedloci::lp
