#include "fixedloci/grassmann.hpp"

#include "fixedloci/combinatorics.hpp"
#include "fixedloci/errors.hpp"

#include <algorithm>
#include <functional>

namespace fixedloci {

void GrassmannProblem::validate() const {
  if (m < 1 || n < 1) throw ValidationError("m and n must be positive");
  if (m > n) throw ValidationError("need m <= n");
  if (static_cast<long>(weights.size()) != n)
    throw DimMismatch("expected " + std::to_string(n) + " weights, got " +
                      std::to_string(weights.size()));
  if (n > 64) throw TooLarge("at most 64 coordinates");
}

std::vector<long> weight_blocks(const std::vector<long>& weights) {
  auto w = weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  std::vector<long> q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] != w[i - 1]) q.push_back(0);
    ++q.back();
  }
  return q;
}

std::vector<GrassmannComponent> classify(const GrassmannProblem& p) {
  p.validate();
  auto w = p.weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  std::vector<long> block_weight;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i] != w[i - 1]) block_weight.push_back(w[i]);
  const auto q = weight_blocks(p.weights);
  const std::size_t k = q.size();

  std::vector<GrassmannComponent> out;
  for (long l = 1; l <= std::min<long>(p.m, static_cast<long>(k)); ++l) {
    // s_1 < ... < s_{l-1} chosen from 1..m-1
    for_each_combination(p.m - 1, l - 1, [&](const std::vector<std::size_t>& cuts) {
      std::vector<long> s{0};
      for (auto c : cuts) s.push_back(static_cast<long>(c) + 1);
      s.push_back(p.m);
      for_each_combination(k, l, [&](const std::vector<std::size_t>& js) {
        GrassmannComponent c;
        c.l = l;
        c.s_seq = s;
        for (long i = 0; i < l; ++i) {
          long t = s[i + 1] - s[i];
          long qj = q[js[i]];
          if (t > qj) return true;
          c.j_seq.push_back(static_cast<long>(js[i]) + 1);
          c.factors.push_back({t, qj, block_weight[js[i]]});
          c.dimension += t * (qj - t);
        }
        out.push_back(std::move(c));
        return true;
      });
      return true;
    });
  }
  return out;
}

long component_count(const GrassmannProblem& p) { return static_cast<long>(classify(p).size()); }

std::string describe(const GrassmannComponent& c) {
  std::string out;
  for (const auto& f : c.factors)
    out += (out.empty() ? "" : " x ") + ("Gr_" + std::to_string(f.t) + "(C^" + std::to_string(f.q) + ")");
  return out;
}

}  // namespace fixedloci
