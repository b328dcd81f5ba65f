#include "fixedloci/cone.hpp"

#include "fixedloci/errors.hpp"
#include "fixedloci/lattice.hpp"
#include "fixedloci/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fixedloci {

namespace {

void check_dims(const std::vector<IntVec>& vs, std::size_t dim) {
  for (const auto& v : vs)
    if (v.size() != dim)
      throw DimMismatch("vector " + to_string(v) + " is not in dimension " + std::to_string(dim));
}

// Extreme rays of the pointed cone {z : m z >= 0}, m of full column rank.
std::vector<IntVec> pointed_extreme_rays(const IntMatrix& m) {
  const std::size_t k = m.cols();
  if (k == 0) return {};
  const auto rows = m.row_list();

  // Seed with k independent rows; the seed cone is simplicial.
  std::vector<std::size_t> processed;
  {
    RatMatrix acc(0, k);
    for (std::size_t i = 0; i < rows.size() && processed.size() < k; ++i) {
      std::vector<std::size_t> trial = processed;
      trial.push_back(i);
      if (rank(to_rational(m.select_rows(trial))) == trial.size()) processed = trial;
    }
  }
  if (processed.size() != k) throw std::logic_error("pointed_extreme_rays: rank deficient");
  auto inv = inverse(to_rational(m.select_rows(processed)));
  std::vector<IntVec> rays;
  for (std::size_t j = 0; j < k; ++j) rays.push_back(primitive(inv->col(j)));

  std::vector<bool> used(rows.size(), false);
  for (auto i : processed) used[i] = true;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    const IntVec& a = rows[i];
    std::vector<Integer> val(rays.size());
    bool any_neg = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      if (val[r] < 0) any_neg = true;
    }
    if (!any_neg) {
      processed.push_back(i);
      used[i] = true;
      continue;
    }
    std::vector<IntVec> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        // Combinatorial adjacency: the processed rows tight at both rays
        // must have rank k - 2.
        std::vector<IntVec> tight;
        for (auto q : processed)
          if (dot(rows[q], rays[p]) == 0 && dot(rows[q], rays[n]) == 0) tight.push_back(rows[q]);
        if (k < 2 || rank_of_rows(tight, k) != k - 2) continue;
        IntVec combo(k);
        for (std::size_t c = 0; c < k; ++c) combo[c] = val[p] * rays[n][c] - val[n] * rays[p][c];
        next.push_back(primitive(combo));
      }
    }
    rays = std::move(next);
    processed.push_back(i);
    used[i] = true;
  }
  std::set<IntVec> uniq(rays.begin(), rays.end());
  return {uniq.begin(), uniq.end()};
}

std::vector<IntVec> nonzero_rows(const HermiteForm& h) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.form.row(i));
  return out;
}

}  // namespace

std::vector<IntVec> cone_generators_from_inequalities(const std::vector<IntVec>& normals,
                                                      std::size_t dim,
                                                      std::vector<IntVec>* lineality_out) {
  check_dims(normals, dim);
  IntMatrix a = IntMatrix::from_rows(normals, dim);
  std::vector<IntVec> lineality = integer_kernel(a);
  // Parametrize L^⊥ = rowspace(a) by an integer basis b: y = b^T z.
  std::vector<IntVec> basis = nonzero_rows(hnf(a));
  std::vector<IntVec> out;
  if (!basis.empty()) {
    IntMatrix bt = IntMatrix::from_rows(basis, dim).transposed();
    IntMatrix reduced = a * bt;
    for (const auto& z : pointed_extreme_rays(reduced)) out.push_back(primitive(bt.apply(z)));
  }
  for (const auto& l : lineality) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (lineality_out) *lineality_out = std::move(lineality);
  return out;
}

RationalCone RationalCone::from_generators(const std::vector<IntVec>& generators, std::size_t dim) {
  check_dims(generators, dim);
  RationalCone c;
  c.dim_ = dim;
  std::vector<IntVec> gens;
  for (const auto& g : generators)
    if (!fixedloci::is_zero(g)) gens.push_back(g);
  c.facets_ = cone_generators_from_inequalities(gens, dim);
  c.generators_ = cone_generators_from_inequalities(c.facets_, dim, &c.lineality_);
  return c;
}

RationalCone RationalCone::from_inequalities(const std::vector<IntVec>& normals, std::size_t dim) {
  check_dims(normals, dim);
  RationalCone c;
  c.dim_ = dim;
  std::vector<IntVec> ns;
  for (const auto& n : normals)
    if (!fixedloci::is_zero(n)) ns.push_back(n);
  c.generators_ = cone_generators_from_inequalities(ns, dim, &c.lineality_);
  c.facets_ = cone_generators_from_inequalities(c.generators_, dim);
  return c;
}

RationalCone RationalCone::zero(std::size_t dim) { return from_generators({}, dim); }

RationalCone RationalCone::full(std::size_t dim) { return from_inequalities({}, dim); }

std::size_t RationalCone::dimension() const { return rank_of_rows(generators_, dim_); }

bool RationalCone::contains(const RatVec& x) const {
  if (x.size() != dim_) throw DimMismatch("cone_contains: point has wrong dimension");
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::interior_contains(const RatVec& x) const {
  if (x.size() != dim_) throw DimMismatch("cone_interior_contains: point has wrong dimension");
  std::set<IntVec> normals(facets_.begin(), facets_.end());
  for (const auto& f : facets_) {
    Rational v = dot(f, x);
    if (v < 0) return false;
    bool equation = normals.count(negate(f)) > 0;
    if (!equation && v == 0) return false;
  }
  return true;
}

RationalCone dual_cone(const RationalCone& c) {
  return RationalCone::from_generators(c.facets(), c.ambient_dim());
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimMismatch("intersect: ambient dimensions differ");
  std::vector<IntVec> normals = a.facets();
  normals.insert(normals.end(), b.facets().begin(), b.facets().end());
  return RationalCone::from_inequalities(normals, a.ambient_dim());
}

bool cone_contains_lp(const RationalCone& c, const RatVec& x) {
  if (x.size() != c.ambient_dim()) throw DimMismatch("cone_contains: point has wrong dimension");
  return lp::nonnegative_combination(c.generators(), x).has_value();
}

Rational q_product(const RatMatrix& q, const RatVec& u, const RatVec& v) {
  return dot(u, q.apply(v));
}

RatVec project_onto_cone(const RationalCone& c, const RatVec& x, const RatMatrix& q) {
  const std::size_t d = c.ambient_dim();
  if (x.size() != d || q.rows() != d || q.cols() != d)
    throw DimMismatch("project_onto_cone: dimension mismatch");
  const auto& gens = c.generators();
  const std::size_t k = gens.size();
  if (k == 0) return RatVec(d, Rational(0));

  std::vector<RatVec> g;
  for (const auto& v : gens) g.push_back(to_rational(v));
  std::vector<RatVec> qg;
  for (const auto& v : g) qg.push_back(q.apply(v));
  RatMatrix gram(k, k);
  RatVec h(k);
  for (std::size_t i = 0; i < k; ++i) {
    h[i] = dot(qg[i], x);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(g[i], qg[j]);
  }

  auto gradient = [&](const RatVec& lambda) {
    RatVec w = h;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (lambda[j] != 0) w[i] -= gram(i, j) * lambda[j];
    return w;
  };
  auto least_squares = [&](const std::vector<std::size_t>& passive) {
    RatMatrix sub(passive.size(), passive.size());
    RatVec rhs(passive.size());
    for (std::size_t a = 0; a < passive.size(); ++a) {
      rhs[a] = h[passive[a]];
      for (std::size_t b = 0; b < passive.size(); ++b) sub(a, b) = gram(passive[a], passive[b]);
    }
    auto s = solve(sub, rhs);
    if (!s) throw std::logic_error("project_onto_cone: inconsistent normal equations");
    RatVec full(k, Rational(0));
    for (std::size_t a = 0; a < passive.size(); ++a) full[passive[a]] = (*s)[a];
    return full;
  };

  RatVec lambda(k, Rational(0));
  std::vector<bool> in_passive(k, false);
  for (std::size_t outer = 0; outer < 100 * (k + 1); ++outer) {
    RatVec w = gradient(lambda);
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < k; ++j)
      if (!in_passive[j] && w[j] > 0 && (enter == SIZE_MAX || w[j] > w[enter])) enter = j;
    if (enter == SIZE_MAX) break;
    in_passive[enter] = true;
    while (true) {
      std::vector<std::size_t> passive;
      for (std::size_t j = 0; j < k; ++j)
        if (in_passive[j]) passive.push_back(j);
      RatVec s = least_squares(passive);
      bool positive = true;
      for (auto j : passive)
        if (s[j] <= 0) positive = false;
      if (positive) {
        lambda = std::move(s);
        break;
      }
      Rational alpha = 1;
      for (auto j : passive)
        if (s[j] <= 0) {
          Rational denom = lambda[j] - s[j];
          Rational step = denom == 0 ? Rational(0) : lambda[j] / denom;
          if (step < alpha) alpha = step;
        }
      for (std::size_t j = 0; j < k; ++j) lambda[j] += alpha * (s[j] - lambda[j]);
      for (auto j : passive)
        if (lambda[j] <= 0) {
          lambda[j] = 0;
          in_passive[j] = false;
        }
    }
  }
  RatVec p(d, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    if (lambda[j] != 0)
      for (std::size_t i = 0; i < d; ++i) p[i] += lambda[j] * g[j][i];
  return p;
}

}  // namespace fixedloci
