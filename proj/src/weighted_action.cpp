#include "fixedloci/weighted_action.hpp"

#include "fixedloci/errors.hpp"

#include <algorithm>
#include <set>

namespace fixedloci {

WeightedAction::WeightedAction(std::size_t g_rank, std::size_t aux_rank,
                               std::vector<WeightItem> items, IntVec theta)
    : g_rank_(g_rank), aux_rank_(aux_rank), items_(std::move(items)), theta_(std::move(theta)) {
  if (theta_.size() != g_rank_)
    throw DimMismatch("theta has " + std::to_string(theta_.size()) + " entries, expected " +
                      std::to_string(g_rank_));
  for (std::size_t s = 0; s < items_.size(); ++s) {
    auto& it = items_[s];
    if (it.chi.size() != g_rank_)
      throw DimMismatch("weight " + std::to_string(s) + ": chi has wrong dimension");
    if (it.w.empty() && aux_rank_ > 0) it.w.assign(aux_rank_, Integer(0));
    if (it.w.size() != aux_rank_)
      throw DimMismatch("weight " + std::to_string(s) + ": aux weight has wrong dimension");
    if (it.mult < 1) throw ValidationError("weight " + std::to_string(s) + ": multiplicity < 1");
    for (int k = 0; k < it.mult; ++k) index_.emplace_back(s, static_cast<std::size_t>(k));
  }
}

IntMatrix WeightedAction::weight_matrix() const {
  IntMatrix m(size(), g_rank_);
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t j = 0; j < g_rank_; ++j) m(k, j) = chi_of(k)[j];
  return m;
}

WeightedAction WeightedAction::with_theta(IntVec theta) const {
  return WeightedAction(g_rank_, aux_rank_, items_, std::move(theta));
}

WeightedAction WeightedAction::with_coordinate_aux(const IntMatrix& aux) const {
  if (aux.rows() != size()) throw DimMismatch("aux weights: one row per coordinate required");
  std::vector<WeightItem> split;
  for (std::size_t k = 0; k < size(); ++k) split.push_back({chi_of(k), aux.row(k), 1});
  return WeightedAction(g_rank_, aux.cols(), std::move(split), theta_);
}

SupportSet full_support(const WeightedAction& a) {
  SupportSet s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) s[k] = k;
  return s;
}

SupportSet complement(const WeightedAction& a, const SupportSet& s) {
  std::vector<bool> in(a.size(), false);
  for (auto k : s) in.at(k) = true;
  SupportSet out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!in[k]) out.push_back(k);
  return out;
}

SupportSet normalize_support(SupportSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<IntVec> support_weights(const WeightedAction& a, const SupportSet& s) {
  std::set<std::size_t> items;
  for (auto k : s) {
    if (k >= a.size()) throw ValidationError("support index " + std::to_string(k) + " out of range");
    items.insert(a.index(k).first);
  }
  std::vector<IntVec> out;
  for (auto i : items) out.push_back(a.items()[i].chi);
  return out;
}

}  // namespace fixedloci
