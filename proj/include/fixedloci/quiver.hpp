#pragma once

#include "fixedloci/toric.hpp"
#include "fixedloci/weighted_action.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixedloci {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const { return vertices.size(); }
  /// Throws ValidationError on dangling endpoints.
  void validate() const;
};

/// Quiver with vertices 0..n-1 named "1".."n".
Quiver make_quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);
/// The m-Kronecker quiver 1 => 2 with arrows a, b, c, ...
Quiver kronecker_quiver(std::size_t m);

using DimensionVector = std::vector<long>;
using StabilityParam = std::vector<long>;
using Grade = std::vector<long>;

/// Requires theta . alpha = 0 and matching sizes; throws ValidationError otherwise.
void validate_stability(const Quiver& q, const DimensionVector& alpha, const StabilityParam& theta);

long pairing(const StabilityParam& theta, const DimensionVector& d);

/// Characters w_a of the auxiliary torus by which it scales each arrow.
struct ArrowWeights {
  std::size_t aux_rank = 0;
  std::vector<Grade> w;  // one per arrow
};

/// x_a = standard basis vector e_a of Z^{Q_1}.
ArrowWeights full_arrow_torus(const Quiver& q);
ArrowWeights trivial_arrow_weights(const Quiver& q);
void validate_arrow_weights(const Quiver& q, const ArrowWeights& w);

/// A graded dimension vector beta on the covering quiver, keyed by (vertex, grade).
/// Only positive entries are stored.
struct CoverVector {
  std::map<std::pair<std::size_t, Grade>, long> entries;

  long at(std::size_t vertex, const Grade& g) const;
  bool empty() const { return entries.empty(); }
  /// sum over grades, per vertex
  DimensionVector total(std::size_t num_vertices) const;
  CoverVector translated(const Grade& xi) const;
  friend auto operator<=>(const CoverVector&, const CoverVector&) = default;
};

/// Translate whose lexicographically smallest grade is 0. Idempotent.
CoverVector canonical_translate(const CoverVector& beta);

/// Axis-aligned window lo <= chi <= hi in Z^aux.
struct GradeBox {
  Grade lo, hi;
  std::size_t dim() const { return lo.size(); }
  bool contains(const Grade& g) const;
};

GradeBox centered_box(std::size_t aux_rank, long radius);
/// (sum alpha) * max |w_a|_inf: any connected support fits after translation.
long default_window_radius(const DimensionVector& alpha, const ArrowWeights& w);

/// Finite induced subquiver of the covering quiver on Q_0 x box, with the
/// (vertex, grade) and (arrow, grade) label of every vertex and arrow.
struct CoveringWindow {
  Quiver quiver;
  std::vector<std::pair<std::size_t, Grade>> vertex_labels;
  std::vector<std::pair<std::size_t, Grade>> arrow_labels;
};

CoveringWindow covering_quiver_window(const Quiver& q, const ArrowWeights& w, const GradeBox& box);

/// Support of beta is connected in the covering quiver (arrows taken unoriented).
bool is_connected_support(const Quiver& q, const ArrowWeights& w, const CoverVector& beta);

/// sum over covering arrows of beta_s beta_t - sum beta^2 + 1.
long component_dimension(const Quiver& q, const ArrowWeights& w, const CoverVector& beta);

/// Covers of alpha up to translation with connected support fitting in the box
/// after some translation. Canonical representatives in lexicographic order.
std::vector<CoverVector> enumerate_covers(const Quiver& q, const ArrowWeights& w,
                                          const DimensionVector& alpha, const GradeBox& box);

/// theta-hat on the vertices of a window: theta of the underlying vertex.
std::vector<long> theta_hat(const CoveringWindow& window, const StabilityParam& theta);
long theta_hat_pairing(const StabilityParam& theta, const CoverVector& beta);

/// The covering quiver restricted to supp(beta): vertices follow the order of
/// beta's entries and `dims` holds beta there.
struct CoverQuiver {
  Quiver quiver;
  DimensionVector dims;
  StabilityParam theta;
  std::vector<std::pair<std::size_t, Grade>> vertex_labels;
  std::vector<std::pair<std::size_t, Grade>> arrow_labels;
};

CoverQuiver cover_quiver(const Quiver& q, const ArrowWeights& w, const CoverVector& beta,
                         const StabilityParam& theta);

/// Sorts rows lexicographically within consecutive blocks of the given sizes.
RhoMap weyl_canonical(const RhoMap& rho, const std::vector<long>& blocks);

/// Lift of rho to the diagonal torus of G_alpha: for each vertex, the grades of
/// beta repeated by multiplicity, vertex blocks in order, Weyl canonical.
RhoMap covers_to_rho(const CoverVector& beta, std::size_t num_vertices);
/// Inverse of covers_to_rho; the result is canonically translated.
CoverVector rho_to_cover(const RhoMap& lift, const DimensionVector& alpha);

/// Passes from the lift to T = T_alpha / Delta: row k minus the last row,
/// last row dropped. Coordinates of X^*(T) are sum-zero vectors with the last
/// slot dropped.
RhoMap rho_on_quotient_torus(const RhoMap& lift);

/// Weights of G_alpha / Delta's maximal torus on R(Q, alpha): one item per
/// (arrow, source copy, target copy), chi = y_{t,s} - y_{s,r}, aux weight w_a.
WeightedAction quiver_weighted_action(const Quiver& q, const ArrowWeights& w,
                                      const DimensionVector& alpha, const StabilityParam& theta);

}  // namespace fixedloci
