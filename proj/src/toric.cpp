#include "fixedloci/toric.hpp"

#include "fixedloci/combinatorics.hpp"
#include "fixedloci/errors.hpp"
#include "fixedloci/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fixedloci {

IntVec RhoMap::pullback(const IntVec& chi) const {
  if (chi.size() != matrix.rows()) throw DimMismatch("rho pullback: character has wrong dimension");
  IntVec out(matrix.cols(), Integer(0));
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) out[j] += chi[i] * matrix(i, j);
  return out;
}

std::string to_string(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::NonemptyVerified:
      return "NonemptyVerified";
    case ComponentStatus::EmptyVerified:
      return "EmptyVerified";
    case ComponentStatus::CandidateOnly:
      return "CandidateOnly";
  }
  return "CandidateOnly";
}

// ---------------------------------------------------------------- fans

std::vector<std::vector<std::size_t>> ToricFan::maximal_cones() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : cones) {
    bool maximal = true;
    for (const auto& d : cones)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

RationalCone ToricFan::cone(const std::vector<std::size_t>& ray_indices) const {
  std::vector<IntVec> gens;
  for (auto i : ray_indices) gens.push_back(rays.at(i));
  return RationalCone::from_generators(gens, lattice_rank);
}

bool ToricFan::is_simplicial() const {
  for (const auto& c : cones) {
    std::vector<IntVec> gens;
    for (auto i : c) gens.push_back(rays.at(i));
    if (rank_of_rows(gens, lattice_rank) != c.size()) return false;
  }
  return true;
}

bool ToricFan::is_face_closed() const {
  std::set<std::vector<std::size_t>> listed(cones.begin(), cones.end());
  for (const auto& c : cones) {
    // Every subset of a simplicial cone's rays spans a face.
    for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1) face.push_back(c[i]);
      if (!listed.count(face)) return false;
    }
    // Faces computed geometrically must be spanned by subsets of the rays.
    auto sigma = cone(c);
    for (const auto& f : sigma.facets()) {
      std::vector<std::size_t> on;
      for (auto i : c)
        if (dot(f, rays[i]) == 0) on.push_back(i);
      if (!listed.count(on)) return false;
    }
  }
  return true;
}

bool ToricFan::has_intersection_property() const {
  // With linearly independent rays every point of a cone has unique
  // coordinates, so the intersection is larger than the common face exactly
  // when some sum_{J1} a_i v_i = sum_{J2} b_j v_j with a, b >= 0 puts weight on
  // a ray outside J1 ∩ J2.
  const bool simplicial = is_simplicial();
  auto shared_point_off_face = [&](const std::vector<std::size_t>& j1, const std::vector<std::size_t>& j2) {
    const std::size_t n = j1.size() + j2.size();
    std::vector<lp::Constraint> cs;
    for (std::size_t r = 0; r < lattice_rank; ++r) {
      lp::Constraint c{RatVec(n, Rational(0)), lp::Relation::Equal, 0};
      for (std::size_t i = 0; i < j1.size(); ++i) c.coeffs[i] = Rational(rays[j1[i]][r]);
      for (std::size_t j = 0; j < j2.size(); ++j) c.coeffs[j1.size() + j] = -Rational(rays[j2[j]][r]);
      cs.push_back(std::move(c));
    }
    lp::Constraint off{RatVec(n, Rational(0)), lp::Relation::Equal, 1};
    for (std::size_t i = 0; i < j1.size(); ++i)
      if (!std::binary_search(j2.begin(), j2.end(), j1[i])) off.coeffs[i] = 1;
    for (std::size_t j = 0; j < j2.size(); ++j)
      if (!std::binary_search(j1.begin(), j1.end(), j2[j])) off.coeffs[j1.size() + j] = 1;
    cs.push_back(std::move(off));
    return lp::find_feasible_point(n, cs, std::vector<bool>(n, true)).has_value();
  };
  std::map<std::vector<std::size_t>, RationalCone> built;
  auto get = [&](const std::vector<std::size_t>& c) -> const RationalCone& {
    auto it = built.find(c);
    if (it == built.end()) it = built.emplace(c, cone(c)).first;
    return it->second;
  };
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                            std::back_inserter(common));
      // A cone on a subset of the rays lies inside the other one.
      if (common == cones[a] || common == cones[b]) continue;
      if (simplicial ? shared_point_off_face(cones[a], cones[b])
                     : !(intersect(get(cones[a]), get(cones[b])) == get(common)))
        return false;
    }
  return true;
}

FanNormalForm fan_normal_form(const ToricFan& fan) {
  const std::size_t n = fan.rays.size();
  if (n > 8) throw TooLarge("fan_normal_form supports at most 8 rays");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::optional<FanNormalForm> best;
  auto key = [](const FanNormalForm& f) { return std::make_pair(f.rays.row_list(), f.cones); };
  do {
    // perm[new position] = old index
    std::vector<std::size_t> where(n);
    for (std::size_t i = 0; i < n; ++i) where[perm[i]] = i;
    IntMatrix cols(fan.lattice_rank, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < fan.lattice_rank; ++r) cols(r, i) = fan.rays[perm[i]][r];
    FanNormalForm cand{hnf(cols).form, {}};
    for (const auto& c : fan.cones) {
      std::vector<std::size_t> relabeled;
      for (auto i : c) relabeled.push_back(where[i]);
      std::sort(relabeled.begin(), relabeled.end());
      cand.cones.push_back(std::move(relabeled));
    }
    std::sort(cand.cones.begin(), cand.cones.end());
    if (!best || key(cand) < key(*best)) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best ? *best : FanNormalForm{IntMatrix(fan.lattice_rank, 0), fan.cones};
}

// ---------------------------------------------------------------- stability

std::vector<SupportSet> stable_subsets(const WeightedAction& a) {
  const std::size_t m = a.size();
  if (m > 20) throw TooLarge("stable_subsets: more than 20 coordinates");
  // Stability only depends on pr(S); cache by item mask.
  std::map<std::vector<bool>, bool> cache;
  std::vector<SupportSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    SupportSet s;
    std::vector<bool> items(a.items().size(), false);
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) {
        s.push_back(k);
        items[a.index(k).first] = true;
      }
    auto it = cache.find(items);
    bool st = it != cache.end() ? it->second : (cache[items] = is_stable_support(a, s));
    if (st) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SupportSet> minimally_stable_subsets(const WeightedAction& a) {
  const std::size_t r = a.g_rank();
  std::vector<SupportSet> out;
  for_each_combination(a.size(), r, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVec> chis;
    for (auto k : idx) chis.push_back(a.chi_of(k));
    if (rank_of_rows(chis, r) == r && is_stable_support(a, idx)) out.push_back(idx);
    return true;
  });
  return out;
}

namespace {

IntMatrix restricted_weights(const WeightedAction& a, const SupportSet& s) {
  IntMatrix as(s.size(), a.g_rank());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < a.g_rank(); ++j) as(i, j) = a.chi_of(s[i])[j];
  return as;
}

// Phi is downward closed and its maximal members are the complements of the
// minimally stable subsets, since stability is upward closed in the support.
std::vector<SupportSet> phi_members(const WeightedAction& a) {
  std::set<SupportSet> phi;
  for (const auto& s : minimally_stable_subsets(a)) {
    SupportSet j = complement(a, s);
    for (std::size_t mask = 0; mask < (std::size_t{1} << j.size()); ++mask) {
      SupportSet face;
      for (std::size_t i = 0; i < j.size(); ++i)
        if (mask >> i & 1) face.push_back(j[i]);
      phi.insert(std::move(face));
    }
  }
  return {phi.begin(), phi.end()};
}

}  // namespace

void check_free_quotient(const WeightedAction& a) {
  if (!is_stable_support(a, full_support(a)))
    throw EmptyStableLocus("the theta-stable locus is empty");
  // The stabilizer of v is the common kernel of chi_s, s in pr(supp v); it is
  // trivial iff those characters generate X^*(G). Both stability and this
  // lattice only depend on pr(S), so it is enough to visit inclusion-minimal
  // stable item sets.
  const std::size_t p = a.items().size();
  if (p > 16) throw TooLarge("free-action check supports at most 16 distinct weights");
  std::vector<std::size_t> minimal;
  for (std::size_t mask = 1; mask < (std::size_t{1} << p); ++mask) {
    bool has_stable_subset = false;
    for (auto m : minimal)
      if ((m & mask) == m) {
        has_stable_subset = true;
        break;
      }
    if (has_stable_subset) continue;
    std::vector<IntVec> chis;
    SupportSet s;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (mask >> a.index(k).first & 1) s.push_back(k);
    if (!is_stable_support(a, s)) continue;
    minimal.push_back(mask);
    for (std::size_t i = 0; i < p; ++i)
      if (mask >> i & 1) chis.push_back(a.items()[i].chi);
    auto inv = smith_invariants(IntMatrix::from_rows(chis, a.g_rank()));
    Integer index = 1;
    for (const auto& x : inv) index *= x;
    if (inv.size() != a.g_rank() || index != 1) {
      std::string list;
      for (auto k : s) list += (list.empty() ? "" : ",") + std::to_string(k);
      throw FreeActionViolated("G does not act freely on the stable locus: points with support {" +
                               list + "} have a stabilizer of order " + index.str());
    }
  }
}

CokernelSection toric_section(const WeightedAction& a, const std::optional<IntMatrix>& section) {
  IntMatrix am = a.weight_matrix();
  if (section) return cokernel_for_section(am, *section);
  try {
    return cokernel_with_section(am);
  } catch (const NotInjective& e) {
    throw FreeActionViolated(std::string("weight map G -> T is not injective: ") + e.what());
  } catch (const TorsionCokernel& e) {
    throw FreeActionViolated(e.what());
  }
}

ToricFan quotient_fan(const WeightedAction& a, const std::optional<IntMatrix>& section) {
  check_free_quotient(a);
  auto cs = toric_section(a, section);
  auto phi = phi_members(a);
  std::set<std::size_t> used;
  for (const auto& j : phi) used.insert(j.begin(), j.end());
  ToricFan fan;
  fan.lattice_rank = a.size() - a.g_rank();
  std::map<std::size_t, std::size_t> ray_of;
  for (auto k : used) {
    ray_of[k] = fan.rays.size();
    fan.ray_coordinates.push_back(k);
    fan.rays.push_back(cs.pi.col(k));
  }
  for (const auto& j : phi) {
    std::vector<std::size_t> c;
    for (auto k : j) c.push_back(ray_of[k]);
    std::sort(c.begin(), c.end());
    fan.cones.push_back(std::move(c));
  }
  std::sort(fan.cones.begin(), fan.cones.end());
  return fan;
}

RhoMap rho_from_stable_subset(const WeightedAction& a, const SupportSet& s,
                              const IntMatrix& section) {
  const std::size_t r = a.g_rank();
  if (s.size() != r) throw ValidationError("rho_from_stable_subset: |S| must equal rank(G)");
  if (section.rows() != a.size()) throw DimMismatch("section must have one row per coordinate");
  IntMatrix as = restricted_weights(a, s);
  if (abs(determinant(as)) != 1)
    throw FreeActionViolated("a_S is not invertible over Z; the action is not free");
  IntMatrix cs = section.select_rows(s);
  return RhoMap{unimodular_inverse(as) * cs};
}

SupportSet s_rho(const WeightedAction& a, const RhoMap& rho, const IntMatrix& section) {
  if (section.rows() != a.size()) throw DimMismatch("section must have one row per coordinate");
  if (rho.matrix.cols() != section.cols()) throw DimMismatch("rho and section disagree on rank");
  SupportSet out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rho.pullback(a.chi_of(k)) == section.row(k)) out.push_back(k);
  return out;
}

SupportSet s_rho(const WeightedAction& a, const RhoMap& rho) {
  if (rho.matrix.cols() != a.aux_rank()) throw DimMismatch("rho and aux weights disagree on rank");
  SupportSet out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rho.pullback(a.chi_of(k)) == a.w_of(k)) out.push_back(k);
  return out;
}

bool necessary_condition(const WeightedAction& a, const RhoMap& rho) {
  std::vector<IntVec> chis;
  for (auto k : s_rho(a, rho)) chis.push_back(a.chi_of(k));
  return rank_of_rows(chis, a.g_rank()) == a.g_rank();
}

std::vector<FixedComponent> fixed_points_toric(const WeightedAction& a,
                                               const std::optional<IntMatrix>& section) {
  check_free_quotient(a);
  auto cs = toric_section(a, section);
  std::vector<FixedComponent> out;
  for (const auto& s : minimally_stable_subsets(a)) {
    FixedComponent fc;
    fc.rho = rho_from_stable_subset(a, s, cs.section);
    fc.v_rho = s_rho(a, fc.rho, cs.section);
    if (fc.v_rho != s) throw std::logic_error("S_rho differs from the minimally stable subset");
    fc.cone_index = complement(a, s);
    fc.g_rho = "G (torus of rank " + std::to_string(a.g_rank()) + ")";
    fc.dimension = static_cast<int>(fc.v_rho.size()) - static_cast<int>(a.g_rank());
    fc.status = ComponentStatus::NonemptyVerified;
    out.push_back(std::move(fc));
  }
  return out;
}

std::vector<std::pair<SupportSet, int>> torus_orbits(const WeightedAction& a) {
  check_free_quotient(a);
  std::vector<std::pair<SupportSet, int>> out;
  const int base = static_cast<int>(a.size()) - static_cast<int>(a.g_rank());
  for (auto& j : phi_members(a)) {
    int dim = base - static_cast<int>(j.size());
    out.emplace_back(std::move(j), dim);
  }
  return out;
}

std::vector<IntMatrix> enumerate_linear_maps(const std::vector<std::pair<IntVec, IntVec>>& e,
                                             std::size_t dx, std::size_t dy) {
  for (const auto& [x, y] : e)
    if (x.size() != dx || y.size() != dy) throw DimMismatch("enumerate_linear_maps: bad pair");
  std::set<std::vector<IntVec>> found;
  if (dx == 0) {
    if (!e.empty()) found.insert({});
  } else {
    for_each_combination(e.size(), dx, [&](const std::vector<std::size_t>& idx) {
      RatMatrix xb(dx, dx);  // columns are the x-parts
      for (std::size_t c = 0; c < dx; ++c)
        for (std::size_t r = 0; r < dx; ++r) xb(r, c) = e[idx[c]].first[r];
      auto inv = inverse(xb);
      if (!inv) return true;
      RatMatrix yb(dy, dx);
      for (std::size_t c = 0; c < dx; ++c)
        for (std::size_t r = 0; r < dy; ++r) yb(r, c) = e[idx[c]].second[r];
      RatMatrix f = yb * *inv;
      std::vector<IntVec> rows(dy, IntVec(dx));
      for (std::size_t r = 0; r < dy; ++r)
        for (std::size_t c = 0; c < dx; ++c) {
          if (boost::multiprecision::denominator(f(r, c)) != 1) return true;
          rows[r][c] = boost::multiprecision::numerator(f(r, c));
        }
      found.insert(std::move(rows));
      return true;
    });
  }
  std::vector<IntMatrix> out;
  for (const auto& rows : found) out.push_back(IntMatrix::from_rows(rows, dx));
  return out;
}

}  // namespace fixedloci
