#pragma once

#include "fixedloci/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fixedloci {

/// One weight space of V: character chi of G, character w of the auxiliary
/// torus acting alongside G, and the multiplicity of the weight.
struct WeightItem {
  IntVec chi;
  IntVec w;
  int mult = 1;
};

/// (T x T')-weights of a linear representation together with the stability
/// character theta of G. T' (the auxiliary torus) may have rank 0.
///
/// Coordinates of V are indexed by pairs (item, copy); `flat` numbers them
/// consecutively, item by item.
class WeightedAction {
 public:
  WeightedAction() = default;
  WeightedAction(std::size_t g_rank, std::size_t aux_rank, std::vector<WeightItem> items,
                 IntVec theta);

  std::size_t g_rank() const { return g_rank_; }
  std::size_t aux_rank() const { return aux_rank_; }
  const std::vector<WeightItem>& items() const { return items_; }
  const IntVec& theta() const { return theta_; }

  /// Number of coordinates, i.e. |I| = dim V.
  std::size_t size() const { return index_.size(); }
  /// (item, copy) of flat coordinate `k`.
  std::pair<std::size_t, std::size_t> index(std::size_t k) const { return index_[k]; }
  const IntVec& chi_of(std::size_t k) const { return items_[index_[k].first].chi; }
  const IntVec& w_of(std::size_t k) const { return items_[index_[k].first].w; }

  /// The map a: G -> T on cocharacters, one row chi_s per coordinate.
  IntMatrix weight_matrix() const;

  /// Same action with theta replaced.
  WeightedAction with_theta(IntVec theta) const;

  /// Splits every item into single coordinates carrying the given aux weights
  /// (one row of `aux` per coordinate).
  WeightedAction with_coordinate_aux(const IntMatrix& aux) const;

 private:
  std::size_t g_rank_ = 0;
  std::size_t aux_rank_ = 0;
  std::vector<WeightItem> items_;
  IntVec theta_;
  std::vector<std::pair<std::size_t, std::size_t>> index_;
};

/// Subset of the flat coordinate set I, sorted and without duplicates.
using SupportSet = std::vector<std::size_t>;

SupportSet full_support(const WeightedAction& a);
SupportSet complement(const WeightedAction& a, const SupportSet& s);
SupportSet normalize_support(SupportSet s);

/// Characters chi_s for s in pr(S), each distinct item once.
std::vector<IntVec> support_weights(const WeightedAction& a, const SupportSet& s);

}  // namespace fixedloci
