#include "fixedloci/rep_oracle.hpp"

#include "fixedloci/combinatorics.hpp"
#include "fixedloci/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace fixedloci {

unsigned worker_count() {
  if (const char* env = std::getenv("FIXEDLOCI_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Vec = std::vector<int>;

// Subspace of F_p^n stored as its reduced row echelon basis.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

// Every subspace of F_p^n, one reduced row echelon form each.
std::vector<Subspace> all_subspaces(std::size_t n, long p) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k)
    for_each_combination(n, k, [&](const std::vector<std::size_t>& piv) {
      // Free slots: row i, column j > piv[i], j not a pivot column.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = piv[i] + 1; j < n; ++j)
          if (!std::binary_search(piv.begin(), piv.end(), j)) free.push_back({i, j});
      std::vector<int> val(free.size(), 0);
      while (true) {
        Subspace s;
        s.pivots = piv;
        s.rows.assign(k, Vec(n, 0));
        for (std::size_t i = 0; i < k; ++i) s.rows[i][piv[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) s.rows[free[f].first][free[f].second] = val[f];
        out.push_back(std::move(s));
        std::size_t f = 0;
        while (f < free.size() && ++val[f] == p) val[f++] = 0;
        if (f == free.size()) break;
      }
      return true;
    });
  return out;
}

bool contains(const Subspace& s, Vec x, long p) {
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    int c = x[s.pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = static_cast<int>(((x[j] - static_cast<long>(c) * s.rows[i][j]) % p + p) % p);
  }
  return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}

Vec apply(const FpMatrix& m, const Vec& x, long p) {
  Vec y(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    long acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += static_cast<long>(m(i, j)) * x[j];
    y[i] = static_cast<int>(acc % p);
  }
  return y;
}

void check_limits(const DimensionVector& dims, long p, const OracleLimits& limits) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  long total = std::accumulate(dims.begin(), dims.end(), 0L);
  if (total > limits.max_total_dim)
    throw TooLarge("finite-field oracle limited to total dimension " +
                   std::to_string(limits.max_total_dim) + " (got " + std::to_string(total) + ")");
  if (p > limits.max_prime)
    throw TooLarge("finite-field oracle limited to p <= " + std::to_string(limits.max_prime));
}

// Calls f(dimension vector) for every subrepresentation until f returns false.
void for_each_subrep(const RepFq& m, const OracleLimits& limits,
                     const std::function<bool(const DimensionVector&)>& f) {
  m.validate();
  check_limits(m.dims, m.p, limits);
  const std::size_t n = m.quiver.num_vertices();
  std::vector<std::vector<Subspace>> choices(n);
  double tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    choices[i] = all_subspaces(m.dims[i], m.p);
    tuples *= static_cast<double>(choices[i].size());
  }
  if (tuples > static_cast<double>(limits.max_subspace_tuples))
    throw TooLarge("too many subspace tuples to enumerate");

  std::vector<const Subspace*> picked(n, nullptr);
  DimensionVector dim(n, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (!f(dim)) stop = true;
      return;
    }
    for (const auto& s : choices[i]) {
      picked[i] = &s;
      bool ok = true;
      for (std::size_t a = 0; a < m.quiver.arrows.size() && ok; ++a) {
        auto [src, tgt] = std::pair{m.quiver.arrows[a].source, m.quiver.arrows[a].target};
        if (std::max(src, tgt) != i) continue;
        for (const auto& u : picked[src]->rows)
          if (!contains(*picked[tgt], apply(m.maps[a], u, m.p), m.p)) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      dim[i] = static_cast<long>(s.rows.size());
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

void RepFq::validate() const {
  quiver.validate();
  if (dims.size() != quiver.num_vertices()) throw DimMismatch("representation dimension vector");
  if (maps.size() != quiver.arrows.size()) throw DimMismatch("need one matrix per arrow");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& arr = quiver.arrows[a];
    if (maps[a].rows != static_cast<std::size_t>(dims[arr.target]) ||
        maps[a].cols != static_cast<std::size_t>(dims[arr.source]))
      throw DimMismatch("matrix of arrow '" + arr.name + "' has the wrong shape");
    for (int x : maps[a].data)
      if (x < 0 || x >= p) throw ValidationError("matrix entry outside [0, p)");
  }
}

RepFq zero_rep(const Quiver& q, const DimensionVector& dims, long p) {
  RepFq m{q, p, dims, {}};
  for (const auto& a : q.arrows) m.maps.emplace_back(dims.at(a.target), dims.at(a.source));
  return m;
}

std::set<DimensionVector> subrep_dimension_vectors(const RepFq& m, const OracleLimits& limits) {
  std::set<DimensionVector> out;
  for_each_subrep(m, limits, [&](const DimensionVector& d) {
    out.insert(d);
    return true;
  });
  return out;
}

bool is_semistable_rep(const RepFq& m, const StabilityParam& theta, const OracleLimits& limits) {
  bool ok = true;
  for_each_subrep(m, limits, [&](const DimensionVector& d) {
    if (pairing(theta, d) < 0) ok = false;
    return ok;
  });
  return ok;
}

bool is_stable_rep(const RepFq& m, const StabilityParam& theta, const OracleLimits& limits) {
  const bool zero_total = std::all_of(m.dims.begin(), m.dims.end(), [](long x) { return x == 0; });
  if (zero_total) return false;
  bool ok = true;
  for_each_subrep(m, limits, [&](const DimensionVector& d) {
    bool trivial = std::all_of(d.begin(), d.end(), [](long x) { return x == 0; }) || d == m.dims;
    if (!trivial && pairing(theta, d) <= 0) ok = false;
    return ok;
  });
  return ok;
}

std::optional<DimensionVector> forced_destabilizer(const Quiver& q, const DimensionVector& dims,
                                                   const StabilityParam& theta) {
  const std::size_t n = q.num_vertices();
  if (n > 12) throw TooLarge("forced-destabilizer search limited to 12 vertices");
  for (std::size_t cmask = 0; cmask < (std::size_t{1} << n); ++cmask) {
    bool closed = true;
    for (const auto& a : q.arrows)
      if ((cmask >> a.source & 1) && !(cmask >> a.target & 1)) closed = false;
    if (!closed) continue;
    DimensionVector gamma(n, 0);
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < n; ++v) {
      if (cmask >> v & 1) {
        gamma[v] = dims[v];
        continue;
      }
      long g = dims[v];
      for (const auto& a : q.arrows)
        if (a.source == v && !(cmask >> a.target & 1)) g -= dims[a.target];
      if (g > 0) free.push_back(v);
    }
    for (std::size_t fmask = 0; fmask < (std::size_t{1} << free.size()); ++fmask) {
      DimensionVector delta = gamma;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (fmask >> k & 1) {
          long g = dims[free[k]];
          for (const auto& a : q.arrows)
            if (a.source == free[k] && !(cmask >> a.target & 1)) g -= dims[a.target];
          delta[free[k]] = g;
        }
      bool zero = std::all_of(delta.begin(), delta.end(), [](long x) { return x == 0; });
      if (zero || delta == dims) continue;
      if (pairing(theta, delta) <= 0) return delta;
    }
  }
  return std::nullopt;
}

RepFq random_rep(const Quiver& q, const DimensionVector& dims, long p, std::uint64_t seed,
                 std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> entry(0, static_cast<int>(p) - 1);
  RepFq m = zero_rep(q, dims, p);
  for (auto& mat : m.maps)
    for (auto& x : mat.data) x = entry(rng);
  return m;
}

Certification certify_component(const CoverQuiver& cq, const CertifyOptions& opts) {
  if (std::all_of(cq.dims.begin(), cq.dims.end(), [](long x) { return x == 0; }))
    throw ZeroDimensionVector("cannot certify the zero dimension vector");
  check_limits(cq.dims, opts.p, opts.limits);
  Certification out;
  if (auto forced = forced_destabilizer(cq.quiver, cq.dims, cq.theta)) {
    out.status = ComponentStatus::EmptyVerified;
    out.forced = forced;
    out.method = "forced destabilizer";
    return out;
  }
  const int trials = std::max(0, opts.trials);
  std::atomic<int> best{trials};
  const unsigned workers = std::min<unsigned>(worker_count(), std::max(1, trials));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned w) {
    try {
      for (int t = static_cast<int>(w); t < best.load(); t += static_cast<int>(workers)) {
        auto m = random_rep(cq.quiver, cq.dims, opts.p, opts.seed, opts.stream, t);
        if (is_stable_rep(m, cq.theta, opts.limits)) {
          int cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  if (best.load() < trials) {
    out.status = ComponentStatus::NonemptyVerified;
    out.witness_trial = best.load();
    out.witness = random_rep(cq.quiver, cq.dims, opts.p, opts.seed, opts.stream, out.witness_trial);
    out.method = "finite-field witness";
  } else {
    out.status = ComponentStatus::CandidateOnly;
    out.method = "no stable sample";
  }
  return out;
}

RepFq flatten_cover_rep(const CoverQuiver& cq, const RepFq& hat, const Quiver& q,
                        const DimensionVector& alpha) {
  std::vector<long> offset(cq.vertex_labels.size(), 0);
  std::vector<long> fill(q.num_vertices(), 0);
  for (std::size_t v = 0; v < cq.vertex_labels.size(); ++v) {
    auto i = cq.vertex_labels[v].first;
    offset[v] = fill[i];
    fill[i] += cq.dims[v];
  }
  if (fill != alpha) throw DimMismatch("cover dimensions do not add up to alpha");
  RepFq m = zero_rep(q, alpha, hat.p);
  for (std::size_t k = 0; k < cq.quiver.arrows.size(); ++k) {
    auto a = cq.arrow_labels[k].first;
    auto s = cq.quiver.arrows[k].source, t = cq.quiver.arrows[k].target;
    const auto& block = hat.maps[k];
    for (std::size_t r = 0; r < block.rows; ++r)
      for (std::size_t c = 0; c < block.cols; ++c)
        m.maps[a](offset[t] + r, offset[s] + c) = block(r, c);
  }
  return m;
}

}  // namespace fixedloci
