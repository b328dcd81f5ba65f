#include "fixedloci/quiver_fixed.hpp"

#include "fixedloci/errors.hpp"

#include <map>

namespace fixedloci {

void validate_problem(const QuiverProblem& problem) {
  problem.quiver.validate();
  validate_arrow_weights(problem.quiver, problem.weights);
  validate_stability(problem.quiver, problem.alpha, problem.theta);
  if (problem.window) {
    const auto& box = *problem.window;
    if (box.lo.size() != problem.weights.aux_rank || box.hi.size() != problem.weights.aux_rank)
      throw DimMismatch("window must have one bound per auxiliary torus coordinate");
    for (std::size_t c = 0; c < box.dim(); ++c)
      if (box.lo[c] > box.hi[c]) throw ValidationError("window lower bound exceeds upper bound");
  }
}

std::string centralizer_descriptor(const CoverVector& beta) {
  std::map<long, long> count;  // block size -> how many
  for (const auto& [key, b] : beta.entries) ++count[b];
  std::string out;
  for (auto it = count.rbegin(); it != count.rend(); ++it) {
    std::string factor = it->first == 1 ? "C^*" : "GL_" + std::to_string(it->first);
    if (it->second > 1) factor = (it->first == 1 ? "(C^*)" : "(" + factor + ")") + "^" +
                                 std::to_string(it->second);
    out += (out.empty() ? "" : " x ") + factor;
  }
  return "(" + out + ")/C^*";
}

QuiverFixedPoints quiver_fixed_points(const QuiverProblem& problem, const CertifyOptions& opts) {
  validate_problem(problem);
  const auto& q = problem.quiver;
  QuiverFixedPoints out;
  out.window = problem.window ? *problem.window
                              : centered_box(problem.weights.aux_rank,
                                             default_window_radius(problem.alpha, problem.weights));
  auto covers = enumerate_covers(q, problem.weights, problem.alpha, out.window);
  if (covers.size() == 1 && covers[0].empty())
    throw ZeroDimensionVector("dimension vector is zero");
  auto action = quiver_weighted_action(q, problem.weights, problem.alpha, problem.theta);
  std::uint64_t stream = 0;
  for (const auto& beta : covers) {
    long dim = component_dimension(q, problem.weights, beta);
    if (dim < 0) {
      out.excluded.push_back({beta, dim});
      continue;
    }
    QuiverFixedComponent c;
    c.beta = beta;
    c.dimension = dim;
    c.rho_lift = covers_to_rho(beta, q.num_vertices());
    c.rho = rho_on_quotient_torus(c.rho_lift);
    c.g_rho = centralizer_descriptor(beta);
    c.necessary_condition = necessary_condition(action, c.rho);
    auto cq = cover_quiver(q, problem.weights, beta, problem.theta);
    CertifyOptions o = opts;
    o.stream = stream++;
    c.certification = certify_component(cq, o);
    c.status = c.certification.status;
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace fixedloci
