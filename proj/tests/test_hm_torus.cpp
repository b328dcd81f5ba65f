#include <doctest.h>

#include "fixedloci/errors.hpp"
#include "fixedloci/hm_torus.hpp"
#include "oracles.hpp"

using namespace fixedloci;

namespace {

WeightedAction hirzebruch(long d) {
  return WeightedAction(2, 0,
                        {{make_int_vec({1, 0}), {}, 2},
                         {make_int_vec({0, 1}), {}, 1},
                         {make_int_vec({d, 1}), {}, 1}},
                        make_int_vec({d + 1, 1}));
}

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<IntVec> out;
  for (auto v : vs) out.push_back(make_int_vec(v));
  return out;
}

}  // namespace

TEST_CASE("index set of a weighted action") {
  auto a = hirzebruch(2);
  CHECK(a.size() == 4);
  CHECK(a.index(1) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(a.index(3) == std::pair<std::size_t, std::size_t>{2, 0});
  CHECK(a.chi_of(3) == make_int_vec({2, 1}));
  CHECK_THROWS_AS(WeightedAction(2, 0, {{make_int_vec({1}), {}, 1}}, make_int_vec({0, 0})),
                  DimMismatch);
  CHECK_THROWS_AS(WeightedAction(1, 0, {{make_int_vec({1}), {}, 0}}, make_int_vec({0})),
                  ValidationError);
}

TEST_CASE("limit cones") {
  for (long d = 0; d <= 3; ++d) {
    auto a = hirzebruch(d);
    CHECK(limit_cone(a, full_support(a)) ==
          RationalCone::from_generators(vecs({{1, 0}, {0, 1}}), 2));
  }
  auto a = hirzebruch(1);
  CHECK(limit_cone(a, {}) == RationalCone::full(2));
  WeightedAction one(2, 0, {{make_int_vec({1, 0}), {}, 1}}, make_int_vec({1, 1}));
  CHECK(limit_cone(one, {0}) == RationalCone::from_inequalities(vecs({{1, 0}}), 2));
}

TEST_CASE("Hirzebruch semi-stable and stable supports") {
  // Stable locus: (x0,x1) != 0 and (y,z) != 0.
  for (long d = 0; d <= 3; ++d) {
    auto a = hirzebruch(d);
    CHECK(is_semistable_support(a, {0, 2}));
    CHECK(is_stable_support(a, {0, 2}));
    CHECK(is_stable_support(a, {1, 3}));
    CHECK_FALSE(is_semistable_support(a, {2, 3}));
    CHECK_FALSE(is_stable_support(a, {0, 1}));
    CHECK(is_stable_support(a, full_support(a)));
    CHECK_FALSE(is_semistable_support(a, {}));
    for (std::size_t mask = 0; mask < 16; ++mask) {
      SupportSet s;
      for (std::size_t k = 0; k < 4; ++k)
        if (mask >> k & 1) s.push_back(k);
      bool has_x = (mask & 3) != 0;
      bool has_yz = (mask & 12) != 0;
      CHECK(is_stable_support(a, s) == (has_x && has_yz));
      CHECK(is_semistable_support(a, s) == (has_x && has_yz));
    }
  }
}

TEST_CASE("Kempf m-value and adapted one-parameter subgroups") {
  auto q2 = default_inner_product(2);
  WeightedAction one(2, 0, {{make_int_vec({1, 0}), {}, 1}}, make_int_vec({1, 1}));
  auto mv = m_value(one, {0}, q2);
  CHECK(mv.sign == -1);
  CHECK(mv.m_squared == 1);
  CHECK(adapted_one_ps(one, {0}, q2) == make_int_vec({0, -1}));

  WeightedAction line(1, 0, {{make_int_vec({1}), {}, 1}}, make_int_vec({1}));
  auto m0 = m_value(line, {}, default_inner_product(1));
  CHECK(m0.sign == -1);
  CHECK(adapted_one_ps(line, {}, default_inner_product(1)) == make_int_vec({-1}));

  WeightedAction two(2, 0, {{make_int_vec({1, 0}), {}, 1}, {make_int_vec({0, 1}), {}, 1}},
                     make_int_vec({1, 1}));
  auto m2 = m_value(two, {0, 1}, q2);
  CHECK(m2.sign == 1);
  CHECK(m2.m_squared == 1);
  CHECK_THROWS_AS(adapted_one_ps(two, {0, 1}, q2), NotUnstable);
}

TEST_CASE("m-value with a non-identity inner product") {
  // Q = diag(1, 4): the cheapest unit eta in {eta1 >= 0} against theta = (1,1)
  // points along (0,-1); |(0,-1)|_Q = 2, so m = -1/2 and m^2 = 1/4.
  WeightedAction one(2, 0, {{make_int_vec({1, 0}), {}, 1}}, make_int_vec({1, 1}));
  IntMatrix q(2, 2);
  q(0, 0) = 1;
  q(1, 1) = 4;
  auto mv = m_value(one, {0}, q);
  CHECK(mv.sign == -1);
  CHECK(mv.m_squared == Rational(1, 4));
  CHECK(adapted_one_ps(one, {0}, q) == make_int_vec({0, -1}));
  IntMatrix bad(2, 2);
  bad(0, 0) = 1;
  bad(0, 1) = 2;
  bad(1, 0) = 2;
  bad(1, 1) = 1;
  CHECK_THROWS_AS(m_value(one, {0}, bad), ValidationError);
}

TEST_CASE("infinite m-value when the limit cone is the origin") {
  WeightedAction a(1, 0, {{make_int_vec({1}), {}, 1}, {make_int_vec({-1}), {}, 1}},
                   make_int_vec({0}));
  auto mv = m_value(a, {0, 1}, default_inner_product(1));
  CHECK(mv.infinite);
  CHECK(mv.sign == 1);
}

TEST_CASE("stability properties on random actions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> rankd(1, 3), countd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = rankd(rng);
    std::vector<WeightItem> items;
    int p = countd(rng);
    for (int i = 0; i < p; ++i) items.push_back({oracle::random_int_vec(rng, r, -3, 3), {}, 1});
    WeightedAction a(r, 0, items, oracle::random_int_vec(rng, r, -3, 3));
    SupportSet s;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (rng() & 1) s.push_back(k);
    bool st = is_stable_support(a, s);
    bool sst = is_semistable_support(a, s);
    if (st) {
      CHECK(sst);
      CHECK(rank_of_rows(support_weights(a, s), r) == r);
    }
    // Monotonicity in the support.
    if (sst) CHECK(is_semistable_support(a, full_support(a)));
    if (st) CHECK(is_stable_support(a, full_support(a)));
    auto mv = m_value(a, s, default_inner_product(r));
    CHECK(sst == (mv.sign >= 0));
    CHECK(st == !oracle::lp_has_nonzero_destabilizer(support_weights(a, s), a.theta()));
  }
}
