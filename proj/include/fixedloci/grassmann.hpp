#pragma once

#include <string>
#include <vector>

namespace fixedloci {

/// Torus acting on C^n by weights, and the quotient of rank-m m x n matrices by GL_m.
struct GrassmannProblem {
  long m = 0;
  long n = 0;
  std::vector<long> weights;

  void validate() const;
};

struct GrassmannFactor {
  long t = 0;  // Gr_t(C^q)
  long q = 0;
  long weight = 0;  // common weight of the block
};

struct GrassmannComponent {
  long l = 0;
  std::vector<long> s_seq;  // 0 = s_0 < ... < s_l = m
  std::vector<long> j_seq;  // 1 <= j_1 < ... < j_l <= k, blocks in descending weight order
  std::vector<GrassmannFactor> factors;
  long dimension = 0;
};

/// Sizes q_1, ..., q_k of the groups of equal weights, largest weight first.
std::vector<long> weight_blocks(const std::vector<long>& weights);

/// Ordered by l, then s_seq, then j_seq.
std::vector<GrassmannComponent> classify(const GrassmannProblem& p);
long component_count(const GrassmannProblem& p);

std::string describe(const GrassmannComponent& c);

}  // namespace fixedloci
