// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include "fixedloci/commands.hpp"
#include "fixedloci/combinatorics.hpp"
#include "fixedloci/errors.hpp"
#include "fixedloci/grassmann.hpp"
#include "fixedloci/hm_torus.hpp"
#include "fixedloci/quiver.hpp"
#include "fixedloci/toric.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace fixedloci;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool run_criterion(int number, const std::string& title, double limit_s,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    std::ostringstream why;
    why << "took " << secs << " s, limit " << limit_s << " s";
    out.fail(why.str());
  }
  std::printf("criterion %d: %s  %s (%.3f s)%s%s\n", number, out.ok ? "PASS" : "FAIL", title.c_str(),
              secs, out.detail.empty() ? "" : " - ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

json hirzebruch_problem(long d) {
  return json::parse(R"({"kind": "toric", "rank": 2,
    "weights": [{"chi": [1, 0], "mult": 2}, {"chi": [0, 1]}, {"chi": [)" +
                     std::to_string(d) + R"(, 1]}],
    "theta": [)" + std::to_string(d + 1) +
                     R"(, 1], "section": [[1, 0], [0, 0], [0, 1], [0, 0]]})");
}

json kronecker_problem() {
  return json::parse(R"({"kind": "quiver", "vertices": ["1", "2"],
    "arrows": [{"name": "a", "source": "1", "target": "2"},
               {"name": "b", "source": "1", "target": "2"},
               {"name": "c", "source": "1", "target": "2"}],
    "alpha": [2, 3], "theta": [-3, 2],
    "options": {"prime": 5, "trials": 200, "seed": 0, "window": 2}})");
}

WeightedAction hirzebruch(long d) {
  return WeightedAction(2, 0,
                        {{make_int_vec({1, 0}), {}, 2}, {make_int_vec({0, 1}), {}, 1},
                         {make_int_vec({d, 1}), {}, 1}},
                        make_int_vec({d + 1, 1}));
}

ToricFan classical_hirzebruch_fan(long d) {
  ToricFan f;
  f.lattice_rank = 2;
  f.rays = {make_int_vec({1, 0}), make_int_vec({0, 1}), make_int_vec({-1, d}), make_int_vec({0, -1})};
  f.ray_coordinates = {0, 1, 2, 3};
  std::set<std::vector<std::size_t>> cones;
  for (std::vector<std::size_t> c : {std::vector<std::size_t>{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
    cones.insert(c);
    cones.insert(std::vector<std::size_t>{c[0]});
    cones.insert(std::vector<std::size_t>{c[1]});
  }
  cones.insert(std::vector<std::size_t>{});
  f.cones.assign(cones.begin(), cones.end());
  return f;
}

IntMatrix mat2(long a, long b, long c, long d) {
  return IntMatrix::from_rows({make_int_vec({a, b}), make_int_vec({c, d})}, 2);
}

IntMatrix from_json(const json& j) {
  std::vector<IntVec> rows;
  for (const auto& r : j) {
    IntVec v;
    for (const auto& x : r) v.push_back(Integer(x.get<long>()));
    rows.push_back(v);
  }
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

WeightedAction random_action(std::mt19937_64& rng, long lo, long hi, int max_items) {
  std::uniform_int_distribution<int> rankd(1, 3), countd(1, max_items);
  std::size_t r = rankd(rng);
  std::vector<WeightItem> items;
  int p = countd(rng);
  for (int i = 0; i < p; ++i) items.push_back({oracle::random_int_vec(rng, r, lo, hi), {}, 1});
  return WeightedAction(r, 0, items, oracle::random_int_vec(rng, r, lo, hi));
}

SupportSet random_support(std::mt19937_64& rng, const WeightedAction& a) {
  SupportSet s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rng() & 1) s.push_back(k);
  return s;
}

IntMatrix random_inner_product(std::mt19937_64& rng, std::size_t r) {
  if (rng() % 3 == 0) return default_inner_product(r);
  IntMatrix b(r, r);
  std::uniform_int_distribution<long> e(-2, 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = e(rng);
  IntMatrix q = b.transposed() * b;
  for (std::size_t i = 0; i < r; ++i) q(i, i) += 1;
  return q;
}

Integer q_norm2(const IntMatrix& q, const IntVec& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * q(i, j) * v[j];
  return s;
}

// ---------------------------------------------------------------- criteria

void hirzebruch_criterion(Outcome& out) {
  for (long d = 0; d <= 3; ++d) {
    std::string tag = "d=" + std::to_string(d) + ": ";
    auto r = cmd_toric(hirzebruch_problem(d), {})["result"];
    if (r["component_count"] != 4) out.fail(tag + "expected 4 fixed points");
    std::set<std::vector<IntVec>> got, want;
    for (const auto& c : r["components"]) {
      if (c["dimension"] != 0) out.fail(tag + "positive-dimensional component");
      got.insert(from_json(c["rho"]).row_list());
    }
    for (const auto& m : {mat2(1, 0, 0, 1), mat2(0, 0, 0, 1), mat2(1, 0, -d, 0), mat2(0, 0, 0, 0)})
      want.insert(m.row_list());
    if (got != want) out.fail(tag + "rho maps differ from the expected four");
    auto fan = quotient_fan(hirzebruch(d), from_json(hirzebruch_problem(d)["section"]));
    if (!(fan_normal_form(fan) == fan_normal_form(classical_hirzebruch_fan(d))))
      out.fail(tag + "fan is not the Hirzebruch fan");
    if (d > 0 && fan_normal_form(fan) == fan_normal_form(classical_hirzebruch_fan(d + 1)))
      out.fail(tag + "fan normal form does not separate d and d+1");
  }
}

// Type of a 3-Kronecker cover class: 1 when a grade of vertex 1 carries
// dimension 2, otherwise 3 when one vertex-1 point feeds all three vertex-2
// points and 2 when both feed two.
int kronecker_type(const json& beta) {
  std::vector<std::vector<long>> ones, twos;
  for (const auto& e : beta) {
    auto g = e["grade"].get<std::vector<long>>();
    if (e["vertex"] == "1") {
      if (e["dim"] == 2) return 1;
      ones.push_back(g);
    } else {
      twos.push_back(g);
    }
  }
  int max_degree = 0;
  for (const auto& g : ones) {
    int deg = 0;
    for (const auto& h : twos) {
      long diff = 0, nonzero = 0;
      for (std::size_t c = 0; c < 3; ++c) {
        diff += h[c] - g[c];
        nonzero += h[c] != g[c];
      }
      if (diff == 1 && nonzero == 1) ++deg;
    }
    max_degree = std::max(max_degree, deg);
  }
  return max_degree == 3 ? 3 : 2;
}

void kronecker_criterion(Outcome& out) {
  auto r = cmd_quiver(kronecker_problem(), {})["result"];
  if (r["prime"] != 5 || r["trials"] != 200) out.fail("oracle not at p=5, 200 trials");
  if (r["candidate_count"] != 19) out.fail("expected 19 candidates, got " + r["candidate_count"].dump());
  std::map<int, int> types, nonempty;
  int ne = 0, em = 0;
  for (const auto& c : r["components"]) {
    if (!c["necessary_condition"].get<bool>()) out.fail("candidate fails the necessary condition");
    int t = kronecker_type(c["beta"]);
    ++types[t];
    if (c["status"] == "NonemptyVerified") {
      ++ne;
      ++nonempty[t];
    } else if (c["status"] == "EmptyVerified") {
      ++em;
    }
  }
  if (types != std::map<int, int>{{1, 1}, {2, 12}, {3, 6}}) out.fail("type partition is not 1 + 12 + 6");
  if (ne != 13 || em != 6)
    out.fail("expected 13 nonempty + 6 empty, got " + std::to_string(ne) + " + " + std::to_string(em));
  if (nonempty != std::map<int, int>{{1, 1}, {2, 12}}) out.fail("nonempty classes are not types 1 and 2");
}

void moduli_dimension_criterion(Outcome& out) {
  auto q = kronecker_quiver(3);
  CoverVector trivial;
  trivial.entries[{0, {}}] = 2;
  trivial.entries[{1, {}}] = 3;
  long dim = component_dimension(q, trivial_arrow_weights(q), trivial);
  if (dim != 6) out.fail("component_dimension = " + std::to_string(dim));
  auto r = cmd_quiver(kronecker_problem(), {})["result"];
  if (r["moduli_dimension"] != 6) out.fail("report moduli_dimension = " + r["moduli_dimension"].dump());
}

void grassmann_criterion(Outcome& out) {
  long cases = 0;
  for (long n = 1; n <= 5; ++n)
    for (long m = 1; m <= std::min(3L, n); ++m) {
      long total = 1;
      for (long i = 0; i < n; ++i) total *= 3;
      for (long code = 0; code < total; ++code) {
        std::vector<long> w(n);
        long c = code;
        for (long i = 0; i < n; ++i, c /= 3) w[i] = c % 3;
        std::vector<std::pair<long, long>> got;
        for (const auto& comp : classify({m, n, w})) {
          long points = 1;
          for (const auto& f : comp.factors) points *= static_cast<long>(binomial(f.q, f.t));
          got.push_back({comp.dimension, points});
        }
        std::sort(got.begin(), got.end());
        if (got != oracle::grassmann_fixed_components(m, w))
          out.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " code=" + std::to_string(code));
        ++cases;
      }
      if (n <= 3) {
        std::vector<long> distinct(n);
        for (long i = 0; i < n; ++i) distinct[i] = i;
        auto comps = classify({m, n, distinct});
        if (static_cast<long>(comps.size()) != static_cast<long>(binomial(n, m)))
          out.fail("distinct weights: count is not binomial(n,m)");
        for (const auto& comp : comps)
          if (comp.dimension != 0) out.fail("distinct weights: positive-dimensional component");
      }
    }
  out.detail = std::to_string(cases) + " weight vectors";
}

void stability_criterion(Outcome& out) {
  std::mt19937_64 rng(20260501);
  int disagreements = 0;
  const int cases = 1500;
  for (int trial = 0; trial < cases; ++trial) {
    auto a = random_action(rng, -3, 3, 6);
    auto s = random_support(rng, a);
    bool st = is_stable_support(a, s);
    bool sst = is_semistable_support(a, s);
    auto weights = support_weights(a, s);
    if (st != !oracle::lp_has_nonzero_destabilizer(weights, a.theta())) ++disagreements;
    if (sst != !oracle::lp_has_strict_destabilizer(weights, a.theta())) ++disagreements;
    if (sst != (m_value(a, s, random_inner_product(rng, a.g_rank())).sign >= 0)) ++disagreements;
  }
  if (disagreements) out.fail(std::to_string(disagreements) + " disagreements");
  else out.detail = std::to_string(cases) + " actions";
}

void kempf_criterion(Outcome& out) {
  std::mt19937_64 rng(777);
  int unstable = 0, violations = 0;
  std::uniform_int_distribution<long> coeff(0, 6), lin(-6, 6);
  while (unstable < 600) {
    auto a = random_action(rng, -3, 3, 6);
    auto s = random_support(rng, a);
    auto q = random_inner_product(rng, a.g_rank());
    auto mv = m_value(a, s, q);
    if (mv.sign >= 0) continue;
    ++unstable;
    auto lambda = adapted_one_ps(a, s, q);
    auto cone = limit_cone(a, s);
    if (!is_primitive(lambda) || !cone.contains(lambda)) {
      ++violations;
      continue;
    }
    Integer tl = dot(a.theta(), lambda);
    Integer nl = q_norm2(q, lambda);
    if (tl >= 0 || Rational(tl * tl, nl) != mv.m_squared) ++violations;
    for (int k = 0; k < 200; ++k) {
      IntVec eta(a.g_rank(), Integer(0));
      for (const auto& g : cone.generators()) {
        long c = coeff(rng);
        for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += c * g[i];
      }
      for (const auto& l : cone.lineality()) {
        long c = lin(rng);
        for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += c * l[i];
      }
      bool zero = std::all_of(eta.begin(), eta.end(), [](const Integer& x) { return x == 0; });
      if (zero) continue;
      Integer te = dot(a.theta(), eta);
      if (te >= 0) continue;
      // <theta,eta>/|eta| >= <theta,lambda>/|lambda| with both sides negative.
      if (te * te * nl > tl * tl * q_norm2(q, eta)) ++violations;
    }
    // The same action listed in another order must give the same cocharacter.
    std::vector<std::size_t> perm(a.items().size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<WeightItem> items;
    std::vector<std::size_t> where(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      items.push_back(a.items()[perm[i]]);
      where[perm[i]] = i;
    }
    WeightedAction b(a.g_rank(), 0, items, a.theta());
    SupportSet t;
    for (auto k : s) t.push_back(where[a.index(k).first]);
    if (adapted_one_ps(b, normalize_support(t), q) != lambda) ++violations;
    // Independent projection: the optimal ray is that of the nearest point of
    // the limit cone to -Q^{-1} theta.
    std::vector<IntVec> gens = cone.generators();
    for (const auto& l : cone.lineality()) {
      gens.push_back(l);
      IntVec neg = l;
      for (auto& x : neg) x = -x;
      gens.push_back(neg);
    }
    auto qr = to_rational(q);
    auto target = *solve(qr, to_rational(a.theta()));
    for (auto& x : target) x = -x;
    auto p = oracle::projection_by_face_enumeration(gens, target, qr);
    if (primitive(p) != lambda) ++violations;
  }
  if (violations) out.fail(std::to_string(violations) + " violations");
  else out.detail = std::to_string(unstable) + " unstable cases";
}

void linear_maps_criterion(Outcome& out) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> entry(-2, 2), count(1, 6);
  int disagreements = 0;
  const int cases = 300;
  for (int trial = 0; trial < cases; ++trial) {
    std::vector<std::array<std::int64_t, 4>> raw;
    std::vector<std::pair<IntVec, IntVec>> e;
    long n = count(rng);
    for (long i = 0; i < n; ++i) {
      std::array<std::int64_t, 4> p{entry(rng), entry(rng), entry(rng), entry(rng)};
      raw.push_back(p);
      e.push_back({make_int_vec({p[0], p[1]}), make_int_vec({p[2], p[3]})});
    }
    auto expected_list = oracle::linear_maps_in_box(raw, 10);
    std::set<std::array<std::int64_t, 4>> expected(expected_list.begin(), expected_list.end());
    std::set<std::array<std::int64_t, 4>> got;
    auto maps = enumerate_linear_maps(e, 2, 2);
    for (const auto& f : maps)
      got.insert({to_int64(f(0, 0)), to_int64(f(0, 1)), to_int64(f(1, 0)), to_int64(f(1, 1))});
    if (got != expected || got.size() != maps.size()) ++disagreements;
  }
  if (disagreements) out.fail(std::to_string(disagreements) + " disagreements");
  else out.detail = std::to_string(cases) + " relations";
}

void fan_criterion(Outcome& out) {
  int fans = 0, bad = 0;
  auto check = [&](const ToricFan& f) {
    ++fans;
    if (!f.is_simplicial() || !f.is_face_closed() || !f.has_intersection_property()) ++bad;
  };
  for (long d = 0; d <= 3; ++d) check(quotient_fan(hirzebruch(d)));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> multd(1, 2);
  for (int trial = 0; trial < 1500; ++trial) {
    auto a = random_action(rng, -2, 2, 4);
    std::vector<WeightItem> items = a.items();
    for (auto& it : items) it.mult = multd(rng);
    WeightedAction b(a.g_rank(), 0, items, a.theta());
    ToricFan f;
    try {
      f = quotient_fan(b);
    } catch (const ValidationError&) {
      continue;
    }
    check(f);
  }
  if (bad) out.fail(std::to_string(bad) + " of " + std::to_string(fans) + " fans violate an axiom");
  else out.detail = std::to_string(fans) + " fans";
}

void determinism_criterion(Outcome& out) {
  std::vector<std::pair<std::string, json>> problems = {{"toric", hirzebruch_problem(2)},
                                                        {"quiver", kronecker_problem()}};
  auto kempf = json::parse(R"({"kind": "weights", "rank": 2,
    "weights": [{"chi": [1, 0]}, {"chi": [0, 1]}, {"chi": [-1, -1]}, {"chi": [1, 1]}],
    "theta": [1, 2], "support": [0, 3], "inner_product": [[2, 1], [1, 2]]})");
  problems.push_back({"kempf", kempf});
  problems.push_back({"grassmann", json::parse(R"({"kind": "grassmann", "m": 2, "n": 4, "weights": [0, 0, 1, 2]})")});
  for (const auto& [cmd, p] : problems) {
    RunOptions seeded;
    seeded.seed = 12345;
    auto first = render(run_command(cmd, p, seeded), OutputFormat::Json);
    auto second = render(run_command(cmd, p, seeded), OutputFormat::Json);
    setenv("FIXEDLOCI_THREADS", "1", 1);
    auto serial = render(run_command(cmd, p, seeded), OutputFormat::Json);
    unsetenv("FIXEDLOCI_THREADS");
    if (first != second) out.fail(cmd + ": reports differ between runs");
    if (first != serial) out.fail(cmd + ": report depends on the worker count");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "Hirzebruch d=0..3: 4 fixed points, rho maps, fan", 1.0, hirzebruch_criterion);
  ok &= run_criterion(2, "3-Kronecker (2,3): 19 = 1+12+6 candidates, 13 nonempty + 6 empty", 60.0,
                      kronecker_criterion);
  ok &= run_criterion(3, "3-Kronecker moduli dimension 6", 0, moduli_dimension_criterion);
  ok &= run_criterion(4, "Grassmannian classifier vs coordinate-plane oracle", 30.0, grassmann_criterion);
  ok &= run_criterion(5, "support stability vs LP formulation and m-value sign", 0, stability_criterion);
  ok &= run_criterion(6, "adapted one-parameter subgroups: cone, optimality, uniqueness", 0, kempf_criterion);
  ok &= run_criterion(7, "lattice maps from relations vs box search", 0, linear_maps_criterion);
  ok &= run_criterion(8, "fan axioms on generated fans", 0, fan_criterion);
  ok &= run_criterion(9, "byte-identical reports across runs and worker counts", 0, determinism_criterion);
  std::printf("acceptance: %s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
