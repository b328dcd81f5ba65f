#include "fixedloci/lp.hpp"

#include <stdexcept>

namespace fixedloci::lp {

std::optional<RatVec> find_feasible_point(std::size_t num_vars,
                                          const std::vector<Constraint>& constraints,
                                          const std::vector<bool>& nonnegative) {
  if (!nonnegative.empty() && nonnegative.size() != num_vars)
    throw std::invalid_argument("find_feasible_point: nonnegativity mask has wrong size");

  // Column layout: structural columns (free variables split as x+ - x-),
  // then one slack/surplus per inequality, then one artificial per row.
  std::vector<std::size_t> pos_col(num_vars), neg_col(num_vars, SIZE_MAX);
  std::size_t n = 0;
  for (std::size_t j = 0; j < num_vars; ++j) {
    pos_col[j] = n++;
    bool nn = !nonnegative.empty() && nonnegative[j];
    if (!nn) neg_col[j] = n++;
  }
  const std::size_t m = constraints.size();
  std::size_t slack_begin = n;
  for (const auto& c : constraints)
    if (c.relation != Relation::Equal) ++n;
  const std::size_t art_begin = n;
  n += m;
  const std::size_t rhs = n;

  std::vector<RatVec> t(m, RatVec(n + 1, Rational(0)));
  std::size_t slack = slack_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    if (c.coeffs.size() != num_vars) throw std::invalid_argument("constraint has wrong arity");
    Rational sign = c.rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < num_vars; ++j) {
      t[i][pos_col[j]] = sign * c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) t[i][neg_col[j]] = -sign * c.coeffs[j];
    }
    if (c.relation == Relation::LessEq) t[i][slack++] = sign;
    if (c.relation == Relation::GreaterEq) t[i][slack++] = -sign;
    t[i][art_begin + i] = 1;
    t[i][rhs] = sign * c.rhs;
  }

  // Reduced costs of the phase-1 objective (sum of artificials).
  RatVec d(n + 1, Rational(0));
  for (std::size_t j = 0; j < n + 1; ++j) {
    if (j >= art_begin && j < rhs) continue;
    for (std::size_t i = 0; i < m; ++i) d[j] -= t[i][j];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = art_begin + i;

  while (true) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < rhs; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == SIZE_MAX) break;
    std::size_t leave = SIZE_MAX;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == SIZE_MAX || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded direction; cannot happen in phase 1
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[leave][j];
    }
    if (d[enter] != 0) {
      Rational f = d[enter];
      for (std::size_t j = 0; j <= n; ++j) d[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= art_begin && t[i][rhs] != 0) return std::nullopt;

  RatVec values(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) values[basis[i]] = t[i][rhs];
  RatVec x(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    x[j] = values[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= values[neg_col[j]];
  }
  return x;
}

std::optional<RatVec> nonnegative_combination(const std::vector<IntVec>& generators,
                                              const RatVec& x) {
  const std::size_t k = generators.size();
  std::vector<Constraint> cons;
  for (std::size_t row = 0; row < x.size(); ++row) {
    Constraint c;
    c.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (generators[j].size() != x.size())
        throw std::invalid_argument("nonnegative_combination: dimension mismatch");
      c.coeffs[j] = generators[j][row];
    }
    c.relation = Relation::Equal;
    c.rhs = x[row];
    cons.push_back(std::move(c));
  }
  if (k == 0) {
    if (is_zero(x)) return RatVec{};
    return std::nullopt;
  }
  return find_feasible_point(k, cons, std::vector<bool>(k, true));
}

}  // namespace fixedloci::lp
