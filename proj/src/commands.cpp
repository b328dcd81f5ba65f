#include "fixedloci/commands.hpp"

#include "fixedloci/errors.hpp"
#include "fixedloci/hm_torus.hpp"
#include "fixedloci/toric.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <sstream>

namespace fixedloci {

namespace {

// ---------------------------------------------------------------- reading

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(path, "missing required field '" + key + "'");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

long get_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<long>();
}

Integer get_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  field_error(path, "expected an integer");
}

std::vector<long> get_long_array(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_long(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

IntVec get_int_vec(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of integers");
  IntVec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_integer(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected a string");
  return j.get<std::string>();
}

void check_kind(const json& j, std::initializer_list<const char*> allowed) {
  const auto& kind = require(j, "kind", "$");
  std::string k = get_string(kind, "$.kind");
  for (const char* a : allowed)
    if (k == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  field_error("$.kind", "expected one of {" + list + "}, got '" + k + "'");
}

const json& options_of(const json& j) {
  static const json empty = json::object();
  auto it = j.find("options");
  if (it == j.end()) return empty;
  if (!it->is_object()) field_error("$.options", "expected an object");
  return *it;
}

// Vertex-indexed data given either as an array in vertex order or as an
// object keyed by vertex name.
std::vector<long> get_vertex_vector(const json& j, const std::string& path, const Quiver& q) {
  if (j.is_array()) {
    auto v = get_long_array(j, path);
    if (v.size() != q.num_vertices())
      field_error(path, "expected " + std::to_string(q.num_vertices()) + " entries, got " +
                            std::to_string(v.size()));
    return v;
  }
  if (!j.is_object()) field_error(path, "expected an array or an object keyed by vertex");
  std::vector<long> v(q.num_vertices(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto pos = std::find(q.vertices.begin(), q.vertices.end(), it.key());
    if (pos == q.vertices.end()) field_error(path + "." + it.key(), "unknown vertex");
    v[pos - q.vertices.begin()] = get_long(it.value(), path + "." + it.key());
  }
  return v;
}

// ---------------------------------------------------------------- writing

json int_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.str();
}

json vec_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

json rat_json(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) return int_json(boost::multiprecision::numerator(x));
  return x.str();
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

json index_list(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

json cone_json(const RationalCone& c) {
  json gens = json::array(), facets = json::array();
  for (const auto& g : c.generators()) gens.push_back(vec_json(g));
  for (const auto& f : c.facets()) facets.push_back(vec_json(f));
  json lin = json::array();
  for (const auto& l : c.lineality()) lin.push_back(vec_json(l));
  return {{"generators", gens}, {"lineality", lin}, {"facets", facets}, {"dimension", c.dimension()}};
}

json base_report(const std::string& command, const json& problem) {
  json r;
  r["tool"] = {{"name", "fixedloci"}, {"version", kToolVersion}};
  r["command"] = command;
  r["input"] = problem;
  return r;
}

json grade_json(const Grade& g) {
  json out = json::array();
  for (auto x : g) out.push_back(x);
  return out;
}

json cover_json(const Quiver& q, const CoverVector& beta) {
  json out = json::array();
  for (const auto& [key, b] : beta.entries)
    out.push_back({{"vertex", q.vertices[key.first]}, {"grade", grade_json(key.second)}, {"dim", b}});
  return out;
}

json fp_matrix_json(const FpMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- parsing

json parse_problem_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

IntMatrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of rows");
  std::vector<IntVec> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(get_int_vec(j[i], path + "[" + std::to_string(i) + "]"));
    if (i == 0) cols = rows.back().size();
    if (rows.back().size() != cols) field_error(path, "rows have different lengths");
  }
  return IntMatrix::from_rows(rows, cols);
}

ToricInput read_weighted_problem(const json& j) {
  check_kind(j, {"toric", "weights"});
  long r = get_long(require(j, "rank", "$"), "$.rank");
  if (r < 0) field_error("$.rank", "must be nonnegative");
  long aux = 0;
  if (auto* a = optional_field(j, "aux_rank")) aux = get_long(*a, "$.aux_rank");
  if (aux < 0) field_error("$.aux_rank", "must be nonnegative");
  const auto& ws = require(j, "weights", "$");
  if (!ws.is_array()) field_error("$.weights", "expected an array");
  std::vector<WeightItem> items;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::string p = "$.weights[" + std::to_string(i) + "]";
    WeightItem item;
    item.chi = get_int_vec(require(ws[i], "chi", p), p + ".chi");
    if (item.chi.size() != static_cast<std::size_t>(r))
      field_error(p + ".chi", "expected " + std::to_string(r) + " entries (the rank)");
    if (auto* w = optional_field(ws[i], "w")) {
      item.w = get_int_vec(*w, p + ".w");
      if (item.w.size() != static_cast<std::size_t>(aux))
        field_error(p + ".w", "expected " + std::to_string(aux) + " entries (aux_rank)");
    }
    if (auto* m = optional_field(ws[i], "mult")) {
      long mult = get_long(*m, p + ".mult");
      if (mult < 1) field_error(p + ".mult", "multiplicity must be at least 1");
      item.mult = static_cast<int>(mult);
    }
    items.push_back(std::move(item));
  }
  IntVec theta = get_int_vec(require(j, "theta", "$"), "$.theta");
  if (theta.size() != static_cast<std::size_t>(r))
    field_error("$.theta", "expected " + std::to_string(r) + " entries (the rank)");
  ToricInput out{WeightedAction(r, aux, items, theta), std::nullopt};
  if (auto* s = optional_field(j, "section")) out.section = parse_matrix(*s, "$.section");
  return out;
}

QuiverProblem read_quiver_problem(const json& j, const RunOptions& opts) {
  check_kind(j, {"quiver"});
  QuiverProblem p;
  const auto& vs = require(j, "vertices", "$");
  if (vs.is_number_integer()) {
    long n = get_long(vs, "$.vertices");
    if (n < 1) field_error("$.vertices", "need at least one vertex");
    for (long i = 0; i < n; ++i) p.quiver.vertices.push_back(std::to_string(i + 1));
  } else {
    if (!vs.is_array() || vs.empty()) field_error("$.vertices", "expected a nonempty array of names");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      auto name = get_string(vs[i], "$.vertices[" + std::to_string(i) + "]");
      if (std::find(p.quiver.vertices.begin(), p.quiver.vertices.end(), name) != p.quiver.vertices.end())
        field_error("$.vertices[" + std::to_string(i) + "]", "duplicate vertex '" + name + "'");
      p.quiver.vertices.push_back(name);
    }
  }
  auto vertex_index = [&](const json& v, const std::string& path) -> std::size_t {
    if (v.is_string()) {
      auto pos = std::find(p.quiver.vertices.begin(), p.quiver.vertices.end(), v.get<std::string>());
      if (pos == p.quiver.vertices.end()) field_error(path, "unknown vertex '" + v.get<std::string>() + "'");
      return pos - p.quiver.vertices.begin();
    }
    long k = get_long(v, path);
    if (k < 1 || k > static_cast<long>(p.quiver.num_vertices()))
      field_error(path, "vertex number out of range (vertices are numbered from 1)");
    return static_cast<std::size_t>(k - 1);
  };
  const auto& as = require(j, "arrows", "$");
  if (!as.is_array()) field_error("$.arrows", "expected an array");
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string path = "$.arrows[" + std::to_string(i) + "]";
    Arrow a;
    a.name = optional_field(as[i], "name") ? get_string(as[i]["name"], path + ".name")
                                            : "a" + std::to_string(i + 1);
    a.source = vertex_index(require(as[i], "source", path), path + ".source");
    a.target = vertex_index(require(as[i], "target", path), path + ".target");
    for (const auto& other : p.quiver.arrows)
      if (other.name == a.name) field_error(path + ".name", "duplicate arrow name '" + a.name + "'");
    p.quiver.arrows.push_back(a);
  }
  p.alpha = get_vertex_vector(require(j, "alpha", "$"), "$.alpha", p.quiver);
  for (std::size_t i = 0; i < p.alpha.size(); ++i)
    if (p.alpha[i] < 0) field_error("$.alpha", "entries must be nonnegative");
  p.theta = get_vertex_vector(require(j, "theta", "$"), "$.theta", p.quiver);
  long tp = pairing(p.theta, p.alpha);
  if (tp != 0)
    field_error("$.theta", "theta . alpha = sum_i theta_i alpha_i must be 0, got " + std::to_string(tp));

  p.weights = full_arrow_torus(p.quiver);
  if (auto* aw = optional_field(j, "arrow_weights")) {
    if (aw->is_string()) {
      auto mode = aw->get<std::string>();
      if (mode == "trivial") p.weights = trivial_arrow_weights(p.quiver);
      else if (mode != "full") field_error("$.arrow_weights", "expected \"full\", \"trivial\" or an object");
    } else {
      long aux = get_long(require(*aw, "aux_rank", "$.arrow_weights"), "$.arrow_weights.aux_rank");
      if (aux < 0) field_error("$.arrow_weights.aux_rank", "must be nonnegative");
      const auto& wm = require(*aw, "weights", "$.arrow_weights");
      if (!wm.is_object()) field_error("$.arrow_weights.weights", "expected an object keyed by arrow name");
      p.weights.aux_rank = aux;
      p.weights.w.assign(p.quiver.arrows.size(), Grade(aux, 0));
      std::vector<bool> seen(p.quiver.arrows.size(), false);
      for (auto it = wm.begin(); it != wm.end(); ++it) {
        std::string path = "$.arrow_weights.weights." + it.key();
        auto pos = std::find_if(p.quiver.arrows.begin(), p.quiver.arrows.end(),
                                [&](const Arrow& a) { return a.name == it.key(); });
        if (pos == p.quiver.arrows.end()) field_error(path, "unknown arrow");
        auto g = get_long_array(it.value(), path);
        if (g.size() != static_cast<std::size_t>(aux))
          field_error(path, "expected " + std::to_string(aux) + " entries (aux_rank)");
        p.weights.w[pos - p.quiver.arrows.begin()] = g;
        seen[pos - p.quiver.arrows.begin()] = true;
      }
      for (std::size_t a = 0; a < seen.size(); ++a)
        if (!seen[a]) field_error("$.arrow_weights.weights", "no weight for arrow '" + p.quiver.arrows[a].name + "'");
    }
  }
  const auto& o = options_of(j);
  std::optional<long> radius = opts.window;
  if (!radius)
    if (auto* w = optional_field(o, "window")) radius = get_long(*w, "$.options.window");
  if (radius) {
    if (*radius < 0) field_error("$.options.window", "window radius must be nonnegative");
    p.window = centered_box(p.weights.aux_rank, *radius);
  }
  return p;
}

GrassmannProblem read_grassmann_problem(const json& j) {
  check_kind(j, {"grassmann"});
  GrassmannProblem p;
  p.m = get_long(require(j, "m", "$"), "$.m");
  p.n = get_long(require(j, "n", "$"), "$.n");
  p.weights = get_long_array(require(j, "weights", "$"), "$.weights");
  if (p.m < 1) field_error("$.m", "must be positive");
  if (p.n < p.m) field_error("$.n", "need m <= n");
  if (static_cast<long>(p.weights.size()) != p.n)
    field_error("$.weights", "expected n = " + std::to_string(p.n) + " weights");
  return p;
}

// ---------------------------------------------------------------- commands

json cmd_toric(const json& problem, const RunOptions& opts) {
  auto in = read_weighted_problem(problem);
  const auto& a = in.action;
  json r = base_report("toric", problem);
  auto cs = toric_section(a, in.section);
  auto fan = quotient_fan(a, in.section);
  auto comps = fixed_points_toric(a, in.section);
  (void)opts;

  json coords = json::array();
  for (std::size_t k = 0; k < a.size(); ++k)
    coords.push_back({{"index", k}, {"item", a.index(k).first}, {"copy", a.index(k).second}});
  json result;
  result["coordinates"] = coords;
  result["quotient_dimension"] = a.size() - a.g_rank();
  result["pi"] = matrix_json(cs.pi);
  result["section"] = matrix_json(cs.section);
  json mins = json::array();
  for (const auto& s : minimally_stable_subsets(a)) mins.push_back(index_list(s));
  result["minimally_stable_subsets"] = mins;

  json rays = json::array();
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    rays.push_back({{"coordinate", fan.ray_coordinates[i]}, {"vector", vec_json(fan.rays[i])}});
  json cones = json::array(), maximal = json::array();
  for (const auto& c : fan.cones) cones.push_back(index_list(c));
  for (const auto& c : fan.maximal_cones()) maximal.push_back(index_list(c));
  json fj;
  fj["lattice_rank"] = fan.lattice_rank;
  fj["rays"] = rays;
  fj["cones"] = cones;
  fj["maximal_cones"] = maximal;
  fj["simplicial"] = fan.is_simplicial();
  fj["face_closed"] = fan.is_face_closed();
  fj["intersection_property"] = fan.has_intersection_property();
  if (fan.rays.size() <= 8) {
    auto nf = fan_normal_form(fan);
    json nc = json::array();
    for (const auto& c : nf.cones) nc.push_back(index_list(c));
    fj["normal_form"] = {{"rays", matrix_json(nf.rays)}, {"cones", nc}};
  }
  result["fan"] = fj;

  json cj = json::array();
  for (const auto& c : comps) {
    json item;
    item["rho"] = matrix_json(c.rho.matrix);
    item["v_rho"] = index_list(c.v_rho);
    item["cone"] = index_list(c.cone_index);
    item["g_rho"] = c.g_rho;
    item["dimension"] = c.dimension;
    item["status"] = to_string(c.status);
    item["s_rho_matches"] = s_rho(a, c.rho, cs.section) == c.v_rho;
    cj.push_back(item);
  }
  result["component_count"] = comps.size();
  result["components"] = cj;
  json orbits = json::array();
  for (const auto& [j, dim] : torus_orbits(a)) orbits.push_back({{"cone", index_list(j)}, {"dimension", dim}});
  result["orbits"] = orbits;
  r["result"] = result;
  return r;
}

json cmd_quiver(const json& problem, const RunOptions& opts) {
  auto p = read_quiver_problem(problem, opts);
  const auto& o = options_of(problem);
  CertifyOptions co;
  co.p = opts.prime ? *opts.prime
                    : (optional_field(o, "prime") ? get_long(o["prime"], "$.options.prime") : 5);
  co.trials = opts.trials ? *opts.trials
                          : (optional_field(o, "trials")
                                 ? static_cast<int>(get_long(o["trials"], "$.options.trials"))
                                 : 200);
  if (opts.seed) {
    co.seed = *opts.seed;
  } else if (auto* s = optional_field(o, "seed")) {
    long v = get_long(*s, "$.options.seed");
    if (v < 0) field_error("$.options.seed", "must be nonnegative");
    co.seed = static_cast<std::uint64_t>(v);
  }
  if (co.trials < 0) throw ValidationError("trials must be nonnegative");
  if (co.p < 2) throw ValidationError("prime must be at least 2");

  auto fixed = quiver_fixed_points(p, co);
  json r = base_report("quiver", problem);
  r["seed"] = co.seed;
  json result;
  result["prime"] = co.p;
  result["trials"] = co.trials;
  result["aux_rank"] = p.weights.aux_rank;
  result["window"] = {{"lo", grade_json(fixed.window.lo)}, {"hi", grade_json(fixed.window.hi)}};
  CoverVector trivial;
  for (std::size_t i = 0; i < p.alpha.size(); ++i)
    if (p.alpha[i] > 0) trivial.entries[{i, Grade{}}] = p.alpha[i];
  result["moduli_dimension"] = component_dimension(p.quiver, trivial_arrow_weights(p.quiver), trivial);

  long nonempty = 0, empty = 0, open = 0;
  json comps = json::array();
  for (std::size_t k = 0; k < fixed.components.size(); ++k) {
    const auto& c = fixed.components[k];
    json item;
    item["index"] = k;
    item["beta"] = cover_json(p.quiver, c.beta);
    item["rho_lift"] = matrix_json(c.rho_lift.matrix);
    item["rho"] = matrix_json(c.rho.matrix);
    item["g_rho"] = c.g_rho;
    item["dimension"] = c.dimension;
    item["necessary_condition"] = c.necessary_condition;
    item["status"] = to_string(c.status);
    json cert;
    cert["method"] = c.certification.method;
    if (c.certification.forced) {
      auto cq = cover_quiver(p.quiver, p.weights, c.beta, p.theta);
      json d = json::array();
      for (std::size_t v = 0; v < cq.vertex_labels.size(); ++v)
        d.push_back({{"vertex", p.quiver.vertices[cq.vertex_labels[v].first]},
                     {"grade", grade_json(cq.vertex_labels[v].second)},
                     {"dim", (*c.certification.forced)[v]}});
      cert["destabilizer"] = d;
      cert["theta_hat"] = pairing(cq.theta, *c.certification.forced);
    }
    if (c.certification.witness) {
      auto cq = cover_quiver(p.quiver, p.weights, c.beta, p.theta);
      auto flat = flatten_cover_rep(cq, *c.certification.witness, p.quiver, p.alpha);
      json maps = json::object();
      for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a)
        maps[p.quiver.arrows[a].name] = fp_matrix_json(flat.maps[a]);
      cert["witness"] = {{"field", "F_" + std::to_string(co.p)},
                         {"trial", c.certification.witness_trial},
                         {"maps", maps}};
    }
    item["certificate"] = cert;
    comps.push_back(item);
    switch (c.status) {
      case ComponentStatus::NonemptyVerified: ++nonempty; break;
      case ComponentStatus::EmptyVerified: ++empty; break;
      case ComponentStatus::CandidateOnly: ++open; break;
    }
  }
  result["candidate_count"] = fixed.components.size();
  result["nonempty_count"] = nonempty;
  result["empty_count"] = empty;
  result["candidate_only_count"] = open;
  result["components"] = comps;
  json excluded = json::array();
  for (const auto& e : fixed.excluded)
    excluded.push_back({{"beta", cover_json(p.quiver, e.beta)},
                        {"dimension", e.dimension},
                        {"reason", "negative expected dimension"}});
  result["excluded"] = excluded;
  r["result"] = result;
  return r;
}

json cmd_grassmann(const json& problem, const RunOptions& opts) {
  (void)opts;
  auto p = read_grassmann_problem(problem);
  auto comps = classify(p);
  json r = base_report("grassmann", problem);
  json result;
  auto w = p.weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  auto q = weight_blocks(p.weights);
  json blocks = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) blocks.push_back({{"weight", w[i]}, {"size", q[i]}});
  result["blocks"] = blocks;
  result["component_count"] = comps.size();
  json cj = json::array();
  for (const auto& c : comps) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back({{"t", f.t}, {"q", f.q}, {"weight", f.weight}});
    cj.push_back({{"l", c.l},
                  {"s", c.s_seq},
                  {"j", c.j_seq},
                  {"factors", factors},
                  {"description", describe(c)},
                  {"dimension", c.dimension}});
  }
  result["components"] = cj;
  r["result"] = result;
  return r;
}

json cmd_kempf(const json& problem, const RunOptions& opts) {
  auto in = read_weighted_problem(problem);
  const auto& a = in.action;
  SupportSet support = full_support(a);
  if (opts.support) {
    support = *opts.support;
  } else if (auto* s = optional_field(problem, "support")) {
    support.clear();
    for (auto x : get_long_array(*s, "$.support")) {
      if (x < 0) field_error("$.support", "indices must be nonnegative");
      support.push_back(static_cast<std::size_t>(x));
    }
  }
  support = normalize_support(support);
  for (auto k : support)
    if (k >= a.size())
      throw ValidationError("$.support: index " + std::to_string(k) + " outside 0.." +
                            std::to_string(a.size() - 1));
  IntMatrix q = default_inner_product(a.g_rank());
  if (opts.inner_product) {
    q = *opts.inner_product;
  } else if (auto* qp = optional_field(problem, "inner_product")) {
    q = parse_matrix(*qp, "$.inner_product");
  }
  validate_inner_product(q, a.g_rank());

  json r = base_report("kempf", problem);
  json result;
  result["support"] = index_list(support);
  result["inner_product"] = matrix_json(q);
  result["limit_cone"] = cone_json(limit_cone(a, support));
  result["semistable"] = is_semistable_support(a, support);
  result["stable"] = is_stable_support(a, support);
  auto mv = m_value(a, support, q);
  result["m_value"] = {{"sign", mv.sign}, {"m_squared", mv.infinite ? json(nullptr) : rat_json(mv.m_squared)},
                       {"infinite", mv.infinite}};
  try {
    result["adapted_one_ps"] = vec_json(adapted_one_ps(a, support, q));
  } catch (const NotUnstable& e) {
    result["adapted_one_ps"] = nullptr;
    result["adapted_note"] = e.what();
  }
  r["result"] = result;
  return r;
}

json run_command(const std::string& command, const json& problem, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  json r;
  if (command == "toric") r = cmd_toric(problem, opts);
  else if (command == "quiver") r = cmd_quiver(problem, opts);
  else if (command == "grassmann") r = cmd_grassmann(problem, opts);
  else if (command == "kempf") r = cmd_kempf(problem, opts);
  else throw ValidationError("unknown command '" + command + "'");
  if (opts.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r["timing_ms"] = ms;
  }
  return r;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string compact(const json& j) { return j.dump(); }

std::string table_toric(const json& r) {
  std::ostringstream os;
  const auto& res = r["result"];
  os << "toric quotient of dimension " << res["quotient_dimension"] << "\n";
  os << "rays:\n";
  for (std::size_t i = 0; i < res["fan"]["rays"].size(); ++i) {
    const auto& ray = res["fan"]["rays"][i];
    os << "  " << i << "  x" << ray["coordinate"] << "  " << compact(ray["vector"]) << "\n";
  }
  os << "maximal cones: " << compact(res["fan"]["maximal_cones"]) << "\n";
  os << "fixed points: " << res["component_count"] << "\n";
  os << "  #  V_rho      cone       rho\n";
  std::size_t k = 0;
  for (const auto& c : res["components"]) {
    std::string v = compact(c["v_rho"]), cone = compact(c["cone"]);
    os << "  " << k++ << "  " << v << std::string(v.size() < 10 ? 10 - v.size() : 1, ' ') << " "
       << cone << std::string(cone.size() < 10 ? 10 - cone.size() : 1, ' ') << " "
       << compact(c["rho"]) << "\n";
  }
  return os.str();
}

std::string table_quiver(const json& r) {
  std::ostringstream os;
  const auto& res = r["result"];
  os << "moduli dimension " << res["moduli_dimension"] << ", window " << compact(res["window"]["lo"])
     << ".." << compact(res["window"]["hi"]) << ", F_" << res["prime"] << ", " << res["trials"]
     << " trials, seed " << r["seed"] << "\n";
  os << "candidates " << res["candidate_count"] << ": nonempty " << res["nonempty_count"]
     << ", empty " << res["empty_count"] << ", undecided " << res["candidate_only_count"]
     << "; excluded " << res["excluded"].size() << "\n";
  for (const auto& c : res["components"]) {
    std::string beta;
    for (const auto& e : c["beta"])
      beta += (beta.empty() ? "" : " ") + e["vertex"].get<std::string>() + compact(e["grade"]) +
              (e["dim"].get<long>() > 1 ? "x" + std::to_string(e["dim"].get<long>()) : "");
    os << "  " << c["index"] << "  dim " << c["dimension"] << "  "
       << c["status"].get<std::string>() << "  " << beta << "\n";
  }
  return os.str();
}

std::string table_grassmann(const json& r) {
  std::ostringstream os;
  const auto& res = r["result"];
  os << "components: " << res["component_count"] << "\n";
  for (const auto& c : res["components"])
    os << "  dim " << c["dimension"] << "  " << c["description"].get<std::string>() << "\n";
  return os.str();
}

std::string table_kempf(const json& r) {
  std::ostringstream os;
  const auto& res = r["result"];
  os << "support " << compact(res["support"]) << "\n";
  os << "semistable " << res["semistable"] << ", stable " << res["stable"] << "\n";
  const auto& mv = res["m_value"];
  if (mv["infinite"].get<bool>()) os << "m = +infinity\n";
  else os << "m^2 = " << (mv["m_squared"].is_string() ? mv["m_squared"].get<std::string>() : compact(mv["m_squared"]))
          << ", sign " << mv["sign"] << "\n";
  os << "adapted one-parameter subgroup: "
     << (res["adapted_one_ps"].is_null() ? std::string("none") : compact(res["adapted_one_ps"])) << "\n";
  return os.str();
}

std::string dot_toric(const json& r) {
  std::ostringstream os;
  const auto& fan = r["result"]["fan"];
  os << "graph fan {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < fan["rays"].size(); ++i)
    os << "  r" << i << " [label=\"" << compact(fan["rays"][i]["vector"]) << "\"];\n";
  std::size_t k = 0;
  for (const auto& c : fan["maximal_cones"]) {
    os << "  c" << k << " [shape=ellipse,label=\"sigma" << compact(c) << "\"];\n";
    for (const auto& i : c) os << "  c" << k << " -- r" << i.get<std::size_t>() << ";\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

std::string dot_quiver(const json& r) {
  std::ostringstream os;
  const auto& in = r["input"];
  os << "digraph quiver {\n";
  os << "  subgraph cluster_q {\n    label=\"Q\";\n";
  std::vector<std::string> names;
  if (in["vertices"].is_number_integer())
    for (long i = 0; i < in["vertices"].get<long>(); ++i) names.push_back(std::to_string(i + 1));
  else
    for (const auto& v : in["vertices"]) names.push_back(v.get<std::string>());
  for (const auto& n : names) os << "    \"" << n << "\";\n";
  std::size_t idx = 0;
  auto vname = [&](const json& v) {
    return v.is_string() ? v.get<std::string>() : names.at(v.get<long>() - 1);
  };
  for (const auto& a : in["arrows"]) {
    std::string label = a.contains("name") ? a["name"].get<std::string>() : "a" + std::to_string(idx + 1);
    os << "    \"" << vname(a["source"]) << "\" -> \"" << vname(a["target"]) << "\" [label=\"" << label
       << "\"];\n";
    ++idx;
  }
  os << "  }\n";
  std::size_t k = 0;
  for (const auto& c : r["result"]["components"]) {
    os << "  subgraph cluster_" << k << " {\n    label=\"beta " << k << " ("
       << c["status"].get<std::string>() << ")\";\n";
    for (const auto& e : c["beta"])
      os << "    \"" << k << ":" << e["vertex"].get<std::string>() << compact(e["grade"]) << "\" [label=\""
         << e["vertex"].get<std::string>() << compact(e["grade"]) << " : " << e["dim"] << "\"];\n";
    os << "  }\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render(const json& report, OutputFormat format) {
  const std::string cmd = report.at("command").get<std::string>();
  switch (format) {
    case OutputFormat::Json:
      return report.dump(2) + "\n";
    case OutputFormat::Table:
      if (cmd == "toric") return table_toric(report);
      if (cmd == "quiver") return table_quiver(report);
      if (cmd == "grassmann") return table_grassmann(report);
      return table_kempf(report);
    case OutputFormat::Dot:
      if (cmd == "toric") return dot_toric(report);
      if (cmd == "quiver") return dot_quiver(report);
      throw ValidationError("dot output is available for toric and quiver reports only");
  }
  return {};
}

}  // namespace fixedloci
