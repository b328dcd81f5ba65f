#include "fixedloci/quiver.hpp"

#include "fixedloci/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixedloci {

void Quiver::validate() const {
  for (const auto& a : arrows)
    if (a.source >= vertices.size() || a.target >= vertices.size())
      throw ValidationError("arrow '" + a.name + "' references a vertex that does not exist");
}

Quiver make_quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  Quiver q;
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  for (std::size_t k = 0; k < arrows.size(); ++k)
    q.arrows.push_back({"a" + std::to_string(k + 1), arrows[k].first, arrows[k].second});
  q.validate();
  return q;
}

Quiver kronecker_quiver(std::size_t m) {
  Quiver q;
  q.vertices = {"1", "2"};
  for (std::size_t k = 0; k < m; ++k)
    q.arrows.push_back({k < 26 ? std::string(1, char('a' + k)) : "a" + std::to_string(k), 0, 1});
  return q;
}

long pairing(const StabilityParam& theta, const DimensionVector& d) {
  if (theta.size() != d.size()) throw DimMismatch("stability and dimension vector sizes differ");
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += theta[i] * d[i];
  return s;
}

void validate_stability(const Quiver& q, const DimensionVector& alpha, const StabilityParam& theta) {
  if (alpha.size() != q.num_vertices())
    throw DimMismatch("dimension vector has " + std::to_string(alpha.size()) + " entries, quiver has " +
                      std::to_string(q.num_vertices()) + " vertices");
  if (theta.size() != q.num_vertices())
    throw DimMismatch("theta has " + std::to_string(theta.size()) + " entries, quiver has " +
                      std::to_string(q.num_vertices()) + " vertices");
  for (auto x : alpha)
    if (x < 0) throw ValidationError("dimension vector entries must be nonnegative");
  long p = pairing(theta, alpha);
  if (p != 0)
    throw ValidationError("theta . alpha = sum_i theta_i alpha_i must be 0, got " + std::to_string(p));
}

ArrowWeights full_arrow_torus(const Quiver& q) {
  ArrowWeights w;
  w.aux_rank = q.arrows.size();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    Grade e(q.arrows.size(), 0);
    e[a] = 1;
    w.w.push_back(e);
  }
  return w;
}

ArrowWeights trivial_arrow_weights(const Quiver& q) {
  return ArrowWeights{0, std::vector<Grade>(q.arrows.size())};
}

void validate_arrow_weights(const Quiver& q, const ArrowWeights& w) {
  if (w.w.size() != q.arrows.size())
    throw DimMismatch("need one arrow weight per arrow (" + std::to_string(q.arrows.size()) + ")");
  for (const auto& x : w.w)
    if (x.size() != w.aux_rank) throw DimMismatch("arrow weight has wrong length");
}

// ---------------------------------------------------------------- covers

namespace {

Grade add(const Grade& a, const Grade& b) {
  Grade out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Grade sub(const Grade& a, const Grade& b) {
  Grade out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

using Node = std::pair<std::size_t, Grade>;

std::vector<Node> neighbours(const Quiver& q, const ArrowWeights& w, const Node& v) {
  std::vector<Node> out;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].source == v.first) out.push_back({q.arrows[a].target, add(v.second, w.w[a])});
    if (q.arrows[a].target == v.first) out.push_back({q.arrows[a].source, sub(v.second, w.w[a])});
  }
  return out;
}

std::set<Node> translate_to_origin(const std::set<Node>& nodes) {
  if (nodes.empty()) return nodes;
  Grade lo = nodes.begin()->second;
  for (const auto& n : nodes) lo = std::min(lo, n.second);
  std::set<Node> out;
  for (const auto& n : nodes) out.insert({n.first, sub(n.second, lo)});
  return out;
}

bool fits(const std::set<Node>& nodes, const GradeBox& box) {
  for (std::size_t c = 0; c < box.dim(); ++c) {
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& n : nodes) {
      if (first || n.second[c] < lo) lo = n.second[c];
      if (first || n.second[c] > hi) hi = n.second[c];
      first = false;
    }
    if (hi - lo > box.hi[c] - box.lo[c]) return false;
  }
  return true;
}

// Every composition of n into k positive parts.
void compositions(long n, std::size_t k, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (long first = 1; first <= n - static_cast<long>(k) + 1; ++first) {
    cur.push_back(first);
    compositions(n - first, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

long CoverVector::at(std::size_t vertex, const Grade& g) const {
  auto it = entries.find({vertex, g});
  return it == entries.end() ? 0 : it->second;
}

DimensionVector CoverVector::total(std::size_t num_vertices) const {
  DimensionVector out(num_vertices, 0);
  for (const auto& [key, b] : entries) out.at(key.first) += b;
  return out;
}

CoverVector CoverVector::translated(const Grade& xi) const {
  CoverVector out;
  for (const auto& [key, b] : entries) out.entries[{key.first, add(key.second, xi)}] = b;
  return out;
}

CoverVector canonical_translate(const CoverVector& beta) {
  if (beta.empty()) return beta;
  Grade lo = beta.entries.begin()->first.second;
  for (const auto& [key, b] : beta.entries) lo = std::min(lo, key.second);
  Grade neg(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) neg[i] = -lo[i];
  return beta.translated(neg);
}

bool GradeBox::contains(const Grade& g) const {
  if (g.size() != lo.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < lo[i] || g[i] > hi[i]) return false;
  return true;
}

GradeBox centered_box(std::size_t aux_rank, long radius) {
  return GradeBox{Grade(aux_rank, -radius), Grade(aux_rank, radius)};
}

long default_window_radius(const DimensionVector& alpha, const ArrowWeights& w) {
  long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
  long mx = 0;
  for (const auto& g : w.w)
    for (auto x : g) mx = std::max(mx, std::abs(x));
  return total * mx;
}

CoveringWindow covering_quiver_window(const Quiver& q, const ArrowWeights& w, const GradeBox& box) {
  validate_arrow_weights(q, w);
  if (box.dim() != w.aux_rank) throw DimMismatch("window dimension differs from aux rank");
  // Lattice points of the box in lexicographic order.
  std::vector<Grade> points;
  bool empty_box = false;
  for (std::size_t c = 0; c < box.dim(); ++c)
    if (box.lo[c] > box.hi[c]) empty_box = true;
  if (!empty_box) {
    Grade g = box.lo;
    while (true) {
      points.push_back(g);
      std::size_t c = box.dim();
      while (c > 0 && g[c - 1] == box.hi[c - 1]) {
        g[c - 1] = box.lo[c - 1];
        --c;
      }
      if (c == 0) break;
      ++g[c - 1];
    }
  }
  CoveringWindow out;
  std::map<Node, std::size_t> id;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    for (const auto& g : points) {
      id[{i, g}] = out.vertex_labels.size();
      out.vertex_labels.push_back({i, g});
      std::string name = q.vertices[i] + "@(";
      for (std::size_t c = 0; c < g.size(); ++c) name += (c ? "," : "") + std::to_string(g[c]);
      out.quiver.vertices.push_back(name + ")");
    }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    for (const auto& g : points) {
      Grade t = add(g, w.w[a]);
      if (!box.contains(t)) continue;
      out.arrow_labels.push_back({a, g});
      out.quiver.arrows.push_back({q.arrows[a].name + "@" + std::to_string(out.arrow_labels.size() - 1),
                                   id.at({q.arrows[a].source, g}), id.at({q.arrows[a].target, t})});
    }
  return out;
}

bool is_connected_support(const Quiver& q, const ArrowWeights& w, const CoverVector& beta) {
  if (beta.empty()) return true;
  std::set<Node> support;
  for (const auto& [key, b] : beta.entries) support.insert(key);
  std::set<Node> seen{*support.begin()};
  std::vector<Node> stack{*support.begin()};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (auto& u : neighbours(q, w, v))
      if (support.count(u) && seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == support.size();
}

long component_dimension(const Quiver& q, const ArrowWeights& w, const CoverVector& beta) {
  if (beta.empty()) throw ZeroDimensionVector("component_dimension needs a nonzero cover");
  validate_arrow_weights(q, w);
  long d = 1;
  for (const auto& [key, b] : beta.entries) {
    d -= b * b;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].source == key.first)
        d += b * beta.at(q.arrows[a].target, add(key.second, w.w[a]));
  }
  return d;
}

std::vector<CoverVector> enumerate_covers(const Quiver& q, const ArrowWeights& w,
                                          const DimensionVector& alpha, const GradeBox& box) {
  validate_arrow_weights(q, w);
  if (alpha.size() != q.num_vertices()) throw DimMismatch("dimension vector size");
  if (box.dim() != w.aux_rank) throw DimMismatch("window dimension differs from aux rank");
  const long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (total == 0) return {CoverVector{}};

  // Connected supports up to translation, grown one vertex at a time.
  std::set<std::set<Node>> seen;
  std::vector<std::set<Node>> frontier;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    if (alpha[i] > 0) {
      std::set<Node> s{{i, Grade(w.aux_rank, 0)}};
      if (seen.insert(s).second) frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<std::set<Node>> next;
    for (const auto& s : frontier) {
      std::vector<long> count(q.num_vertices(), 0);
      for (const auto& n : s) ++count[n.first];
      for (const auto& v : s)
        for (auto& u : neighbours(q, w, v)) {
          if (s.count(u) || count[u.first] >= alpha[u.first]) continue;
          auto grown = s;
          grown.insert(u);
          if (!fits(grown, box)) continue;
          grown = translate_to_origin(grown);
          if (seen.insert(grown).second) next.push_back(std::move(grown));
        }
    }
    frontier = std::move(next);
  }

  std::vector<CoverVector> out;
  for (const auto& s : seen) {
    std::vector<std::vector<Node>> per_vertex(q.num_vertices());
    for (const auto& n : s) per_vertex[n.first].push_back(n);
    bool covers_all = true;
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      if (alpha[i] > 0 && per_vertex[i].empty()) covers_all = false;
    if (!covers_all) continue;
    // Choose multiplicities vertex by vertex.
    std::vector<std::vector<std::vector<long>>> options(q.num_vertices());
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
      std::vector<long> cur;
      compositions(alpha[i], per_vertex[i].size(), cur, options[i]);
    }
    std::vector<std::size_t> pick(q.num_vertices(), 0);
    while (true) {
      CoverVector beta;
      for (std::size_t i = 0; i < q.num_vertices(); ++i)
        for (std::size_t k = 0; k < per_vertex[i].size(); ++k)
          beta.entries[per_vertex[i][k]] = options[i][pick[i]][k];
      out.push_back(std::move(beta));
      std::size_t i = 0;
      while (i < q.num_vertices() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == q.num_vertices()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> theta_hat(const CoveringWindow& window, const StabilityParam& theta) {
  std::vector<long> out;
  for (const auto& [i, g] : window.vertex_labels) out.push_back(theta.at(i));
  return out;
}

long theta_hat_pairing(const StabilityParam& theta, const CoverVector& beta) {
  long s = 0;
  for (const auto& [key, b] : beta.entries) s += theta.at(key.first) * b;
  return s;
}

CoverQuiver cover_quiver(const Quiver& q, const ArrowWeights& w, const CoverVector& beta,
                         const StabilityParam& theta) {
  validate_arrow_weights(q, w);
  CoverQuiver out;
  std::map<Node, std::size_t> id;
  for (const auto& [key, b] : beta.entries) {
    id[key] = out.vertex_labels.size();
    out.vertex_labels.push_back(key);
    out.dims.push_back(b);
    out.theta.push_back(theta.at(key.first));
    std::string name = q.vertices[key.first] + "@(";
    for (std::size_t c = 0; c < key.second.size(); ++c)
      name += (c ? "," : "") + std::to_string(key.second[c]);
    out.quiver.vertices.push_back(name + ")");
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    for (const auto& [key, b] : beta.entries) {
      if (key.first != q.arrows[a].source) continue;
      auto it = id.find({q.arrows[a].target, add(key.second, w.w[a])});
      if (it == id.end()) continue;
      out.arrow_labels.push_back({a, key.second});
      out.quiver.arrows.push_back({q.arrows[a].name, id.at(key), it->second});
    }
  return out;
}

// ---------------------------------------------------------------- rho

RhoMap weyl_canonical(const RhoMap& rho, const std::vector<long>& blocks) {
  auto rows = rho.matrix.row_list();
  std::size_t start = 0;
  for (auto b : blocks) {
    if (b < 0 || start + b > rows.size()) throw DimMismatch("Weyl blocks do not match rho");
    std::sort(rows.begin() + start, rows.begin() + start + b);
    start += b;
  }
  if (start != rows.size()) throw DimMismatch("Weyl blocks do not cover every row of rho");
  return RhoMap{IntMatrix::from_rows(rows, rho.matrix.cols())};
}

RhoMap covers_to_rho(const CoverVector& beta, std::size_t num_vertices) {
  auto canon = canonical_translate(beta);
  std::size_t aux = canon.empty() ? 0 : canon.entries.begin()->first.second.size();
  std::vector<IntVec> rows;
  std::vector<long> blocks(num_vertices, 0);
  for (std::size_t i = 0; i < num_vertices; ++i)
    for (const auto& [key, b] : canon.entries)
      if (key.first == i) {
        IntVec row(key.second.begin(), key.second.end());
        for (long c = 0; c < b; ++c) rows.push_back(row);
        blocks[i] += b;
      }
  return weyl_canonical(RhoMap{IntMatrix::from_rows(rows, aux)}, blocks);
}

CoverVector rho_to_cover(const RhoMap& lift, const DimensionVector& alpha) {
  long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (static_cast<long>(lift.matrix.rows()) != total)
    throw DimMismatch("rho lift needs one row per basis vector of the dimension vector");
  CoverVector beta;
  std::size_t row = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (long c = 0; c < alpha[i]; ++c, ++row) {
      Grade g;
      for (const auto& x : lift.matrix.row(row)) g.push_back(to_int64(x));
      ++beta.entries[{i, g}];
    }
  return canonical_translate(beta);
}

RhoMap rho_on_quotient_torus(const RhoMap& lift) {
  const std::size_t n = lift.matrix.rows();
  if (n == 0) throw DimMismatch("rho lift has no rows");
  IntMatrix out(n - 1, lift.matrix.cols());
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t j = 0; j < lift.matrix.cols(); ++j)
      out(k, j) = lift.matrix(k, j) - lift.matrix(n - 1, j);
  return RhoMap{out};
}

WeightedAction quiver_weighted_action(const Quiver& q, const ArrowWeights& w,
                                      const DimensionVector& alpha, const StabilityParam& theta) {
  validate_arrow_weights(q, w);
  validate_stability(q, alpha, theta);
  const long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (total == 0) throw ZeroDimensionVector("dimension vector is zero");
  const std::size_t r = static_cast<std::size_t>(total) - 1;
  std::vector<std::size_t> offset(alpha.size() + 1, 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) offset[i + 1] = offset[i] + alpha[i];
  auto drop_last = [&](const std::vector<long>& full) {
    IntVec v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = full[k];
    return v;
  };
  std::vector<WeightItem> items;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = std::pair{q.arrows[a].source, q.arrows[a].target};
    IntVec wa(w.w[a].begin(), w.w[a].end());
    for (long rr = 0; rr < alpha[s]; ++rr)
      for (long ss = 0; ss < alpha[t]; ++ss) {
        std::vector<long> chi(total, 0);
        chi[offset[t] + ss] += 1;
        chi[offset[s] + rr] -= 1;
        items.push_back({drop_last(chi), wa, 1});
      }
  }
  std::vector<long> th(total, 0);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (long c = 0; c < alpha[i]; ++c) th[offset[i] + c] = theta[i];
  return WeightedAction(r, w.aux_rank, items, drop_last(th));
}

}  // namespace fixedloci
