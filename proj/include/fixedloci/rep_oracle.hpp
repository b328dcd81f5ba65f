#pragma once

#include "fixedloci/quiver.hpp"
#include "fixedloci/toric.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fixedloci {

/// Dense matrix over F_p, row-major, entries in [0, p).
struct FpMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<int> data;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  int operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

/// A representation of a finite quiver over F_p: one dims[t] x dims[s]
/// matrix per arrow s -> t.
struct RepFq {
  Quiver quiver;
  long p = 5;
  DimensionVector dims;
  std::vector<FpMatrix> maps;

  /// Throws on shape mismatches or entries outside [0, p).
  void validate() const;
};

RepFq zero_rep(const Quiver& q, const DimensionVector& dims, long p);

/// Limits for exhaustive subspace enumeration.
struct OracleLimits {
  long max_total_dim = 8;
  long max_prime = 5;
  std::uint64_t max_subspace_tuples = 20'000'000;
};

/// Dimension vectors of all subrepresentations, by exhaustive enumeration of
/// arrow-stable tuples of subspaces. Throws TooLarge past the limits.
std::set<DimensionVector> subrep_dimension_vectors(const RepFq& m, const OracleLimits& limits = {});

/// King: theta(U) >= 0 for every subrepresentation U.
bool is_semistable_rep(const RepFq& m, const StabilityParam& theta, const OracleLimits& limits = {});
/// King: theta(U) > 0 for every nonzero proper subrepresentation U.
bool is_stable_rep(const RepFq& m, const StabilityParam& theta, const OracleLimits& limits = {});

/// Dimension vector of a subrepresentation present in every representation of
/// the given shape, with theta <= 0, nonzero and proper. It takes the full
/// spaces on a successor-closed vertex set C, and elsewhere the common kernel
/// of the arrows leaving C's complement, whose dimension is at least
/// dims_v - sum of target dims.
std::optional<DimensionVector> forced_destabilizer(const Quiver& q, const DimensionVector& dims,
                                                   const StabilityParam& theta);

struct CertifyOptions {
  long p = 5;
  int trials = 200;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // distinguishes components sharing a seed
  OracleLimits limits{};
};

struct Certification {
  ComponentStatus status = ComponentStatus::CandidateOnly;
  std::optional<RepFq> witness;            // stable F_p point (finite-field witness)
  std::optional<DimensionVector> forced;   // destabilizing dimension vector
  int witness_trial = -1;
  std::string method;
};

/// EmptyVerified from a forced destabilizer, NonemptyVerified from a stable
/// random F_p representation, CandidateOnly otherwise. Trials run on up to
/// worker_count() threads; the witness is the one with the smallest trial
/// index, so the result does not depend on scheduling.
Certification certify_component(const CoverQuiver& cq, const CertifyOptions& opts);

/// Random representation for trial `trial` of stream `stream`.
RepFq random_rep(const Quiver& q, const DimensionVector& dims, long p, std::uint64_t seed,
                 std::uint64_t stream, std::uint64_t trial);

/// Rewrites a representation of the covering quiver on supp(beta) as a
/// representation of Q with dimension vector alpha; the basis at vertex i runs
/// over the cover vertices above i in their stored order.
RepFq flatten_cover_rep(const CoverQuiver& cq, const RepFq& hat, const Quiver& q,
                        const DimensionVector& alpha);

/// Worker count: FIXEDLOCI_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

}  // namespace fixedloci
