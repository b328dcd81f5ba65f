#include <doctest.h>

#include "fixedloci/errors.hpp"
#include "fixedloci/quiver.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace fixedloci;

namespace {

// Independent connectivity check: union-find over all pairs of support
// points joined by some arrow.
bool union_find_connected(const Quiver& q, const ArrowWeights& w, const CoverVector& beta) {
  std::vector<std::pair<std::size_t, Grade>> pts;
  for (const auto& [key, b] : beta.entries) pts.push_back(key);
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != pts[i].first || q.arrows[a].target != pts[j].first) continue;
        bool hit = true;
        for (std::size_t c = 0; c < w.aux_rank; ++c)
          if (pts[i].second[c] + w.w[a][c] != pts[j].second[c]) hit = false;
        if (hit) parent[find(i)] = find(j);
      }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < pts.size(); ++i) roots.insert(find(i));
  return roots.size() <= 1;
}

// Shift so the smallest grade (lexicographic) is zero, written out directly.
CoverVector shift_to_zero(const CoverVector& beta) {
  Grade lo;
  bool first = true;
  for (const auto& [key, b] : beta.entries)
    if (first || key.second < lo) {
      lo = key.second;
      first = false;
    }
  CoverVector out;
  for (const auto& [key, b] : beta.entries) {
    Grade g = key.second;
    for (std::size_t c = 0; c < g.size(); ++c) g[c] -= lo[c];
    out.entries[{key.first, g}] += b;
  }
  return out;
}

std::vector<Grade> box_points(const GradeBox& box) {
  std::vector<Grade> pts{Grade{}};
  for (std::size_t c = 0; c < box.dim(); ++c) {
    std::vector<Grade> next;
    for (const auto& p : pts)
      for (long x = box.lo[c]; x <= box.hi[c]; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    pts = next;
  }
  return pts;
}

// Multisets of size n drawn from pts, as index lists.
void multisets(std::size_t n, std::size_t pts, std::size_t from, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pts; ++i) {
    cur.push_back(i);
    multisets(n, pts, i, cur, out);
    cur.pop_back();
  }
}

std::set<CoverVector> brute_force_covers(const Quiver& q, const ArrowWeights& w,
                                         const DimensionVector& alpha, const GradeBox& box) {
  auto pts = box_points(box);
  std::vector<std::vector<std::vector<std::size_t>>> choices(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<std::size_t> cur;
    multisets(alpha[i], pts.size(), 0, cur, choices[i]);
  }
  std::set<CoverVector> out;
  std::vector<std::size_t> pick(alpha.size(), 0);
  while (true) {
    CoverVector beta;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (auto p : choices[i][pick[i]]) ++beta.entries[{i, pts[p]}];
    if (union_find_connected(q, w, beta)) out.insert(shift_to_zero(beta));
    std::size_t i = 0;
    while (i < alpha.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == alpha.size()) break;
  }
  return out;
}

Grade e3(int m) {
  Grade g(3, 0);
  g[m] = 1;
  return g;
}

Grade combo(std::initializer_list<std::pair<int, long>> terms) {
  Grade g(3, 0);
  for (auto [m, c] : terms) g[m] += c;
  return g;
}

CoverVector two_layer(const std::vector<Grade>& layer1, const std::vector<Grade>& layer2) {
  CoverVector beta;
  for (const auto& g : layer1) ++beta.entries[{0, g}];
  for (const auto& g : layer2) ++beta.entries[{1, g}];
  return canonical_translate(beta);
}

int letter(char c) { return c - 'a'; }

CoverVector type2(const std::string& m) {
  int m1 = letter(m[0]), m2 = letter(m[1]), m3 = letter(m[2]), m4 = letter(m[3]);
  return two_layer({Grade(3, 0), combo({{m2, 1}, {m3, -1}})},
                   {e3(m1), e3(m2), combo({{m2, 1}, {m3, -1}, {m4, 1}})});
}

CoverVector type3(const std::string& m) {
  int m1 = letter(m[0]), m2 = letter(m[1]), m3 = letter(m[2]), m4 = letter(m[3]);
  return two_layer({Grade(3, 0), combo({{m3, 1}, {m4, -1}})}, {e3(m1), e3(m2), e3(m3)});
}

}  // namespace

TEST_CASE("quiver validation") {
  auto q = kronecker_quiver(3);
  CHECK_NOTHROW(validate_stability(q, {2, 3}, {-3, 2}));
  CHECK_THROWS_AS(validate_stability(q, {2, 3}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(validate_stability(q, {2}, {0}), DimMismatch);
  CHECK_THROWS_AS(make_quiver(1, {{0, 1}}), ValidationError);
}

TEST_CASE("covering quiver windows") {
  auto q = make_quiver(2, {{0, 1}});
  auto w = full_arrow_torus(q);
  auto win = covering_quiver_window(q, w, GradeBox{{0}, {1}});
  CHECK(win.vertex_labels.size() == 4);
  CHECK(win.vertex_labels[0] == std::pair<std::size_t, Grade>{0, {0}});
  CHECK(win.vertex_labels[3] == std::pair<std::size_t, Grade>{1, {1}});
  REQUIRE(win.arrow_labels.size() == 1);
  CHECK(win.arrow_labels[0] == std::pair<std::size_t, Grade>{0, {0}});
  CHECK(win.quiver.arrows[0].source == 0);
  CHECK(win.quiver.arrows[0].target == 3);

  CHECK(covering_quiver_window(q, w, GradeBox{{0}, {0}}).quiver.arrows.empty());

  ArrowWeights zero{1, {{0}}};
  auto copies = covering_quiver_window(q, zero, GradeBox{{0}, {2}});
  CHECK(copies.quiver.num_vertices() == 6);
  CHECK(copies.quiver.arrows.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(copies.vertex_labels[copies.quiver.arrows[k].source].second ==
          copies.vertex_labels[copies.quiver.arrows[k].target].second);

  auto th = theta_hat(covering_quiver_window(kronecker_quiver(3), full_arrow_torus(kronecker_quiver(3)),
                                             centered_box(3, 1)),
                      {-3, 2});
  CHECK(th.size() == 54);
  CHECK(std::count(th.begin(), th.end(), -3) == 27);
  CHECK(std::count(th.begin(), th.end(), 2) == 27);
}

TEST_CASE("covers of small quivers") {
  auto q = make_quiver(2, {{0, 1}});
  auto w = full_arrow_torus(q);
  auto covers = enumerate_covers(q, w, {1, 1}, centered_box(1, 2));
  REQUIRE(covers.size() == 1);
  CoverVector expected;
  expected.entries[{0, {0}}] = 1;
  expected.entries[{1, {1}}] = 1;
  CHECK(covers[0] == expected);
  CHECK(theta_hat_pairing({1, -1}, covers[0]) == 0);

  auto zero = enumerate_covers(q, w, {0, 0}, centered_box(1, 2));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
}

TEST_CASE("cover enumeration agrees with brute force") {
  struct Case {
    Quiver q;
    ArrowWeights w;
    DimensionVector alpha;
    long radius;
  };
  auto k2 = kronecker_quiver(2);
  auto a3 = make_quiver(3, {{0, 1}, {1, 2}});
  auto jordan = make_quiver(1, {{0, 0}});
  auto cyc = make_quiver(2, {{0, 1}, {1, 0}});
  std::vector<Case> cases = {
      {k2, full_arrow_torus(k2), {2, 2}, 1},
      {k2, full_arrow_torus(k2), {1, 3}, 1},
      {a3, full_arrow_torus(a3), {1, 2, 1}, 1},
      {a3, ArrowWeights{1, {{1}, {1}}}, {2, 2, 1}, 1},
      {jordan, full_arrow_torus(jordan), {3}, 2},
      {cyc, full_arrow_torus(cyc), {2, 2}, 1},
      {cyc, ArrowWeights{1, {{1}, {-1}}}, {2, 1}, 1},
  };
  for (const auto& c : cases) {
    auto box = centered_box(c.w.aux_rank, c.radius);
    auto got = enumerate_covers(c.q, c.w, c.alpha, box);
    std::set<CoverVector> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(got_set == brute_force_covers(c.q, c.w, c.alpha, box));
    for (const auto& beta : got) {
      CHECK(beta.total(c.alpha.size()) == c.alpha);
      CHECK(canonical_translate(beta) == beta);
      CHECK(is_connected_support(c.q, c.w, beta) == union_find_connected(c.q, c.w, beta));
    }
  }
}

TEST_CASE("translation canonical form") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> g(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    CoverVector beta;
    for (int k = 0; k < 4; ++k) beta.entries[{std::size_t(k % 2), {g(rng), g(rng)}}] += 1;
    auto c = canonical_translate(beta);
    CHECK(canonical_translate(c) == c);
    CHECK(canonical_translate(beta.translated({g(rng), g(rng)})) == c);
    CHECK(c == shift_to_zero(beta));
  }
}

TEST_CASE("component dimensions") {
  auto k3 = kronecker_quiver(3);
  CoverVector trivial;
  trivial.entries[{0, {}}] = 2;
  trivial.entries[{1, {}}] = 3;
  CHECK(component_dimension(k3, trivial_arrow_weights(k3), trivial) == 6);
  // dim V - dim G for the ambient quotient: 18 - (4 + 9 - 1)
  CHECK(component_dimension(k3, trivial_arrow_weights(k3), trivial) == 18 - 12);

  auto q = make_quiver(2, {{0, 1}});
  auto unit = enumerate_covers(q, full_arrow_torus(q), {1, 1}, centered_box(1, 2))[0];
  CHECK(component_dimension(q, full_arrow_torus(q), unit) == 0);
  CoverVector simple;
  simple.entries[{0, {0}}] = 1;
  CHECK(component_dimension(q, full_arrow_torus(q), simple) == 0);
  CHECK_THROWS_AS(component_dimension(q, full_arrow_torus(q), CoverVector{}), ZeroDimensionVector);
}

TEST_CASE("Weyl canonical form") {
  auto m = [](std::vector<std::vector<long>> rows) {
    std::vector<IntVec> rs;
    for (auto& r : rows) rs.push_back(IntVec(r.begin(), r.end()));
    return RhoMap{IntMatrix::from_rows(rs, 2)};
  };
  CHECK(weyl_canonical(m({{0, 1}, {1, 0}}), {2}) == m({{0, 1}, {1, 0}}));
  CHECK(weyl_canonical(m({{1, 0}, {0, 1}}), {2}) == m({{0, 1}, {1, 0}}));
  CHECK(weyl_canonical(m({{1, 0}, {0, 1}}), {1, 1}) == m({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(weyl_canonical(m({{1, 0}, {0, 1}}), {1}), DimMismatch);
  // abac and caba give W-conjugate morphisms.
  CHECK(covers_to_rho(type2("abac"), 2) == covers_to_rho(type2("caba"), 2));
  CHECK_FALSE(covers_to_rho(type2("abac"), 2) == covers_to_rho(type2("abab"), 2));
}

TEST_CASE("covers and rho maps") {
  // Type (1): rho = (1, 1 | t_a, t_b, t_c).
  auto t1 = two_layer({Grade(3, 0), Grade(3, 0)}, {e3(0), e3(1), e3(2)});
  auto rho = covers_to_rho(t1, 2);
  std::vector<IntVec> rows = {make_int_vec({0, 0, 0}), make_int_vec({0, 0, 0}),
                              make_int_vec({0, 0, 1}), make_int_vec({0, 1, 0}),
                              make_int_vec({1, 0, 0})};
  CHECK(rho.matrix == IntMatrix::from_rows(rows, 3));
  CHECK(rho_to_cover(rho, {2, 3}) == t1);

  RhoMap trivial{IntMatrix(5, 3)};
  auto beta = rho_to_cover(trivial, {2, 3});
  CHECK(beta.at(0, Grade(3, 0)) == 2);
  CHECK(beta.at(1, Grade(3, 0)) == 3);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> g(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    DimensionVector alpha = {1 + long(rng() % 3), 1 + long(rng() % 3)};
    IntMatrix lift(alpha[0] + alpha[1], 2);
    for (std::size_t i = 0; i < lift.rows(); ++i)
      for (std::size_t j = 0; j < 2; ++j) lift(i, j) = g(rng);
    auto cover = rho_to_cover(RhoMap{lift}, alpha);
    CHECK(cover.total(2) == alpha);
    auto back = covers_to_rho(cover, 2);
    CHECK(rho_to_cover(back, alpha) == cover);
    // back is lift translated by a common row vector, then sorted per block.
    auto diff = rho_on_quotient_torus(weyl_canonical(RhoMap{lift}, alpha));
    CHECK(rho_on_quotient_torus(back) == diff);
  }
}

TEST_CASE("3-Kronecker covers") {
  auto q = kronecker_quiver(3);
  auto w = full_arrow_torus(q);
  DimensionVector alpha = {2, 3};
  auto covers = enumerate_covers(q, w, alpha, centered_box(3, 2));
  CHECK(default_window_radius(alpha, w) == 5);
  std::vector<CoverVector> candidates;
  for (const auto& b : covers)
    if (component_dimension(q, w, b) >= 0) candidates.push_back(b);
  CHECK(candidates.size() == 19);
  for (const auto& b : candidates) CHECK(component_dimension(q, w, b) == 0);

  const std::vector<std::string> t2 = {"abab", "abac", "abca", "abcb", "acab", "acac",
                                       "acbc", "babc", "bacb", "bcac", "bcbc", "cabc"};
  const std::vector<std::string> t3 = {"abca", "abcb", "acba", "acbc", "bcab", "bcac"};
  std::set<CoverVector> listed{two_layer({Grade(3, 0), Grade(3, 0)}, {e3(0), e3(1), e3(2)})};
  for (const auto& m : t2) {
    listed.insert(type2(m));
    std::string rev(m.rbegin(), m.rend());
    CHECK(covers_to_rho(type2(m), 2) == covers_to_rho(type2(rev), 2));
  }
  for (const auto& m : t3) {
    listed.insert(type3(m));
    std::string swapped = {m[1], m[0], m[2], m[3]};
    CHECK(type3(m) == type3(swapped));
  }
  CHECK(listed.size() == 19);
  CHECK(listed == std::set<CoverVector>(candidates.begin(), candidates.end()));

  // Necessary condition on the torus level agrees with connectivity.
  auto a = quiver_weighted_action(q, w, alpha, {-3, 2});
  CHECK(a.g_rank() == 4);
  CHECK(a.size() == 18);
  for (const auto& b : covers) {
    auto rho = rho_on_quotient_torus(covers_to_rho(b, 2));
    CHECK(necessary_condition(a, rho));
  }
  auto split = two_layer({Grade(3, 0), combo({{0, 5}})}, {e3(0), e3(1), combo({{0, 5}, {1, 1}})});
  CHECK_FALSE(is_connected_support(q, w, split));
  CHECK_FALSE(necessary_condition(a, rho_on_quotient_torus(covers_to_rho(split, 2))));
  // V_rho = R(Q-hat, beta): four coordinates for every type (2) quadruple.
  CHECK(s_rho(a, rho_on_quotient_torus(covers_to_rho(type2("abac"), 2))).size() == 4);
}

TEST_CASE("connectivity matches the necessary condition on random covers") {
  auto q = make_quiver(3, {{0, 1}, {1, 2}, {0, 2}});
  auto w = full_arrow_torus(q);
  DimensionVector alpha = {1, 2, 1};
  auto a = quiver_weighted_action(q, w, alpha, {1, 0, -1});
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> g(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    CoverVector beta;
    for (std::size_t i = 0; i < 3; ++i)
      for (long c = 0; c < alpha[i]; ++c) ++beta.entries[{i, {g(rng), g(rng), g(rng)}}];
    auto rho = rho_on_quotient_torus(covers_to_rho(beta, 3));
    CHECK(necessary_condition(a, rho) == union_find_connected(q, w, beta));
  }
}
