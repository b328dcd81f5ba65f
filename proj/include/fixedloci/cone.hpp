#pragma once

#include "fixedloci/matrix.hpp"

#include <vector>

namespace fixedloci {

/// Rational polyhedral cone in Q^d held in both generator and inequality form.
///
/// Canonical generators are: plus and minus each Hermite basis vector of the
/// lineality space, followed by the extreme rays of the pointed part C ∩ L^⊥
/// (L^⊥ taken with respect to the standard dot product), all primitive and
/// sorted lexicographically. Two cones are equal iff their generator lists are
/// equal. Facets are the canonical generators of the dual cone, so an equation
/// shows up as a pair of opposite normals.
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(const std::vector<IntVec>& generators, std::size_t dim);
  /// {y : <n, y> >= 0 for every n in normals}.
  static RationalCone from_inequalities(const std::vector<IntVec>& normals, std::size_t dim);
  static RationalCone zero(std::size_t dim);
  static RationalCone full(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  /// Hermite basis of the largest linear subspace contained in the cone.
  const std::vector<IntVec>& lineality() const { return lineality_; }

  /// Dimension of the linear span.
  std::size_t dimension() const;
  bool is_fulldim() const { return dimension() == dim_; }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return generators_.empty(); }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rational(x)); }

  /// Relative-interior membership: strict on every proper facet and equality
  /// on the equations of the span. For a full-dimensional cone this is the
  /// usual interior.
  bool interior_contains(const RatVec& x) const;
  bool interior_contains(const IntVec& x) const { return interior_contains(to_rational(x)); }

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> lineality_;
};

RationalCone dual_cone(const RationalCone& c);
RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// Membership through the generator description, by exact LP feasibility.
bool cone_contains_lp(const RationalCone& c, const RatVec& x);

/// Canonical generators of {y : <n, y> >= 0 for all n}; also reports the
/// lineality basis. Double description on the pointed part.
std::vector<IntVec> cone_generators_from_inequalities(const std::vector<IntVec>& normals,
                                                      std::size_t dim,
                                                      std::vector<IntVec>* lineality = nullptr);

/// Nearest point of `c` to `x` in the norm <u, v>_Q = u^T Q v.
///
/// Exact Lawson-Hanson active-set iteration on the canonical generators.
/// Q must be symmetric positive definite.
RatVec project_onto_cone(const RationalCone& c, const RatVec& x, const RatMatrix& q);

/// u^T Q v.
Rational q_product(const RatMatrix& q, const RatVec& u, const RatVec& v);

}  // namespace fixedloci
