#pragma once

#include "fixedloci/quiver.hpp"
#include "fixedloci/rep_oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixedloci {

struct QuiverProblem {
  Quiver quiver;
  DimensionVector alpha;
  StabilityParam theta;
  ArrowWeights weights;
  std::optional<GradeBox> window;  // default: centered box of default_window_radius
};

struct QuiverFixedComponent {
  CoverVector beta;
  RhoMap rho_lift;  // on the diagonal torus of G_alpha
  RhoMap rho;       // on T = T_alpha / Delta
  std::string g_rho;
  long dimension = 0;
  bool necessary_condition = false;
  ComponentStatus status = ComponentStatus::CandidateOnly;
  Certification certification;
};

/// A connected cover whose expected dimension is negative. The stable locus
/// of such a cover is empty: G_beta / C^* would act freely on an open subset
/// of R(Q-hat, beta) of larger dimension.
struct ExcludedCover {
  CoverVector beta;
  long dimension = 0;
};

struct QuiverFixedPoints {
  GradeBox window;
  std::vector<QuiverFixedComponent> components;
  std::vector<ExcludedCover> excluded;
};

void validate_problem(const QuiverProblem& problem);

/// Covers of alpha up to translation, each certified on its covering quiver.
/// Components are numbered in cover order and that index is the RNG stream.
QuiverFixedPoints quiver_fixed_points(const QuiverProblem& problem, const CertifyOptions& opts);

/// "(GL_2 x (C^*)^3)/C^*"-style description of the centralizer G_beta mod scalars.
std::string centralizer_descriptor(const CoverVector& beta);

}  // namespace fixedloci
