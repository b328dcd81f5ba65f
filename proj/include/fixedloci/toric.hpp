#pragma once

#include "fixedloci/hm_torus.hpp"
#include "fixedloci/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fixedloci {

/// A morphism rho: T' -> G of tori on cocharacter lattices: one row per
/// coordinate of G, one column per coordinate of T'.
struct RhoMap {
  IntMatrix matrix;

  /// rho^*(chi) = chi^T * matrix, a character of T'.
  IntVec pullback(const IntVec& chi) const;
  friend bool operator==(const RhoMap& a, const RhoMap& b) { return a.matrix == b.matrix; }
};

enum class ComponentStatus { NonemptyVerified, EmptyVerified, CandidateOnly };

std::string to_string(ComponentStatus s);

/// One connected component F_rho of the fixed locus of a toric quotient.
struct FixedComponent {
  RhoMap rho;
  SupportSet v_rho;       // S_rho, the coordinates spanning V_rho
  SupportSet cone_index;  // J = complement of S_rho, the maximal cone of the fan
  std::string g_rho;      // centralizer descriptor
  int dimension = 0;
  ComponentStatus status = ComponentStatus::CandidateOnly;
};

/// Simplicial fan in N = X_*(T'). `rays[i]` is pi_* of coordinate
/// `ray_coordinates[i]`; each cone lists sorted indices into `rays`.
struct ToricFan {
  std::size_t lattice_rank = 0;
  std::vector<std::size_t> ray_coordinates;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> cones;

  std::vector<std::vector<std::size_t>> maximal_cones() const;
  RationalCone cone(const std::vector<std::size_t>& ray_indices) const;

  bool is_simplicial() const;
  bool is_face_closed() const;
  /// Checks sigma_{J1} ∩ sigma_{J2} = sigma_{J1 ∩ J2} by exact cone intersection
  /// for every pair of listed cones.
  bool has_intersection_property() const;
};

/// Canonical representative of a fan up to GL(N) and ray relabeling.
struct FanNormalForm {
  IntMatrix rays;  // Hermite form of the ray matrix (rays as columns)
  std::vector<std::vector<std::size_t>> cones;
  friend bool operator==(const FanNormalForm&, const FanNormalForm&) = default;
};

/// Minimum over all ray orderings; limited to 8 rays.
FanNormalForm fan_normal_form(const ToricFan& fan);

/// Every theta-stable subset of I. Exhaustive, limited to |I| <= 20.
std::vector<SupportSet> stable_subsets(const WeightedAction& a);

/// Minimally theta-stable subsets: the stable size-r subsets whose characters
/// form a basis. Only size-r subsets are visited. Sorted lexicographically.
std::vector<SupportSet> minimally_stable_subsets(const WeightedAction& a);

/// Throws EmptyStableLocus or FreeActionViolated when the quotient is not a
/// smooth geometric quotient by a free action.
void check_free_quotient(const WeightedAction& a);

/// Section data for the toric quotient; `section` overrides the Hermite default.
CokernelSection toric_section(const WeightedAction& a,
                              const std::optional<IntMatrix>& section = std::nullopt);

ToricFan quotient_fan(const WeightedAction& a,
                      const std::optional<IntMatrix>& section = std::nullopt);

/// rho = a_S^{-1} pr_S c for a minimally stable S.
RhoMap rho_from_stable_subset(const WeightedAction& a, const SupportSet& s,
                              const IntMatrix& section);

/// {k in I : c_k = rho^*(chi_k)}, with c_k the k-th row of the section.
SupportSet s_rho(const WeightedAction& a, const RhoMap& rho, const IntMatrix& section);

/// {k in I : w_k = rho^*(chi_k)} using the aux weights carried by `a`.
SupportSet s_rho(const WeightedAction& a, const RhoMap& rho);

/// The characters chi_k for k in S_rho (aux weights from `a`) span Q^r.
bool necessary_condition(const WeightedAction& a, const RhoMap& rho);

std::vector<FixedComponent> fixed_points_toric(
    const WeightedAction& a, const std::optional<IntMatrix>& section = std::nullopt);

/// All torus orbits of the quotient: (J, orbit dimension m - r - |J|).
std::vector<std::pair<SupportSet, int>> torus_orbits(const WeightedAction& a);

/// Lattice maps f: Z^dx -> Z^dy (as dy x dx matrices) for which
/// {x : (x, f(x)) in E} spans Q^dx. Each such f is determined by its values on
/// a basis drawn from E, so the search runs over those bases.
std::vector<IntMatrix> enumerate_linear_maps(const std::vector<std::pair<IntVec, IntVec>>& e,
                                             std::size_t dx, std::size_t dy);

}  // namespace fixedloci
