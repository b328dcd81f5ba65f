#pragma once

#include "fixedloci/matrix.hpp"

#include <vector>

namespace fixedloci {

/// Result of a row Hermite normal form computation: `transform * input == form`.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;  // unimodular
  std::size_t rank = 0;
};

/// Row Hermite normal form. Pivots are positive, lie in strictly increasing
/// columns, and the entries above each pivot are reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& a);

/// Diagonal of the Smith normal form, nonzero invariants only, each dividing the next.
std::vector<Integer> smith_invariants(const IntMatrix& a);

bool is_unimodular(const IntMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Saturated lattice basis of {x in Z^n : a x = 0}, rows in Hermite normal form.
std::vector<IntVec> integer_kernel(const IntMatrix& a);

/// Hermite normal form basis of the saturation of the lattice spanned by `vectors`.
std::vector<IntVec> saturated_span(const std::vector<IntVec>& vectors, std::size_t dim);

/// Cocharacter-level data of 1 -> G -> T -> T' -> 1.
///
/// `a` is m x r (column j is the image of the j-th basis cocharacter of G),
/// `pi` is (m - r) x m with pi * a = 0, and `section` is m x (m - r) with
/// pi * section = identity.
struct CokernelSection {
  IntMatrix pi;
  IntMatrix section;
};

/// Throws NotInjective when `a` has a kernel and TorsionCokernel when
/// Z^m / a(Z^r) has torsion.
CokernelSection cokernel_with_section(const IntMatrix& a);

/// Uses a caller-chosen section; requires [a | section] to be unimodular.
CokernelSection cokernel_for_section(const IntMatrix& a, const IntMatrix& section);

}  // namespace fixedloci
