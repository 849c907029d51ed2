#pragma once

// The pairing (configuration) model: n cells of d points, a uniform perfect
// matching of the d n points, and the multigraph obtained by collapsing cells.
// Boundary statistics, exhaustive isoperimetric minima and Monte Carlo
// estimates of boundary-signature counts at desk scale.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isoperim/errors.hpp"
#include "isoperim/exact_combinatorics.hpp"
#include "isoperim/parallel.hpp"

namespace isoperim {

using VertexMask = std::uint64_t;

inline constexpr std::uint64_t kDefaultPairingCap = 10'000'000;
inline constexpr int kDefaultExhaustiveCap = 24;
inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

// ---------------------------------------------------------------------------
// Random numbers

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of replica `index` under a master seed; independent of how replicas are scheduled.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

/// Uniform integer in [0, bound) by multiply-and-reject; the same stream on every platform.
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  static_assert(Engine::min() == 0 && Engine::max() == std::numeric_limits<std::uint64_t>::max());
  unsigned __int128 m = static_cast<unsigned __int128>(eng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(eng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// ---------------------------------------------------------------------------
// Pairings

struct Pairing {
  int n = 0;
  int d = 0;
  std::vector<int> mate;  // fixed-point-free involution on the d n points

  int points() const { return n * d; }
  int cell(int point) const { return point / d; }

  void validate() const {
    if (n < 1 || d < 1) throw DomainError("pairing: n and d must be positive");
    if (static_cast<int>(mate.size()) != points()) throw DomainError("pairing: mate has the wrong length");
    for (int p = 0; p < points(); ++p) {
      const int q = mate[std::size_t(p)];
      if (q < 0 || q >= points() || q == p || mate[std::size_t(q)] != p)
        throw DomainError("pairing: mate is not a fixed-point-free involution at point " + std::to_string(p));
    }
  }
};

namespace detail {
inline void check_pairing_shape(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("pairing: n and d must be positive");
  if ((std::int64_t(n) * d) % 2 != 0) throw DomainError("pairing: d n must be even");
}
}  // namespace detail

/// Uniform pairing: Fisher-Yates shuffle of the points, paired consecutively.
template <class Engine>
Pairing sample_pairing(int n, int d, Engine& eng) {
  detail::check_pairing_shape(n, d);
  const int m = n * d;
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(eng, std::uint64_t(i) + 1));
    std::swap(order[std::size_t(i)], order[std::size_t(j)]);
  }
  Pairing p{n, d, std::vector<int>(std::size_t(m))};
  for (int i = 0; i < m; i += 2) {
    p.mate[std::size_t(order[std::size_t(i)])] = order[std::size_t(i) + 1];
    p.mate[std::size_t(order[std::size_t(i) + 1])] = order[std::size_t(i)];
  }
  return p;
}

inline Pairing sample_pairing(int n, int d, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return sample_pairing(n, d, eng);
}

/// Visits every pairing once, pairing the smallest unmatched point with each
/// remaining point in increasing order. Refuses when M(d n) exceeds the cap.
inline std::uint64_t for_each_pairing(int n, int d, const std::function<void(const Pairing&)>& visit,
                                      std::uint64_t cap = kDefaultPairingCap) {
  detail::check_pairing_shape(n, d);
  const BigInt total = matchings_count(std::int64_t(n) * d);
  if (total > cap) {
    const std::uint64_t required =
        total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max() : total.convert_to<std::uint64_t>();
    throw CapExceeded("for_each_pairing: number of pairings", required, cap);
  }
  Pairing p{n, d, std::vector<int>(std::size_t(n) * std::size_t(d), -1)};
  std::uint64_t count = 0;
  const int m = n * d;
  std::function<void(int)> rec = [&](int from) {
    int first = from;
    while (first < m && p.mate[std::size_t(first)] >= 0) ++first;
    if (first == m) {
      ++count;
      visit(p);
      return;
    }
    for (int q = first + 1; q < m; ++q) {
      if (p.mate[std::size_t(q)] >= 0) continue;
      p.mate[std::size_t(first)] = q;
      p.mate[std::size_t(q)] = first;
      rec(first + 1);
      p.mate[std::size_t(first)] = -1;
      p.mate[std::size_t(q)] = -1;
    }
  };
  rec(0);
  return count;
}

// ---------------------------------------------------------------------------
// Multigraphs

class Multigraph {
 public:
  Multigraph() = default;

  /// Edges are unordered pairs; (v, v) is a loop.
  static Multigraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw DomainError("multigraph: n must be positive");
    Multigraph g;
    g.n_ = n;
    g.incident_.assign(std::size_t(n), {});
    g.loops_.assign(std::size_t(n), 0);
    g.union_.assign(std::size_t(n), 0);
    for (auto& [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("multigraph: edge endpoint out of range");
      if (a > b) std::swap(a, b);
      g.incident_[std::size_t(a)].push_back(b);
      g.incident_[std::size_t(b)].push_back(a);
      if (a == b) {
        ++g.loops_[std::size_t(a)];
      } else if (n <= 64) {
        g.union_[std::size_t(a)] |= VertexMask{1} << b;
        g.union_[std::size_t(b)] |= VertexMask{1} << a;
      }
    }
    std::sort(edges.begin(), edges.end());
    g.simple_ = std::adjacent_find(edges.begin(), edges.end()) == edges.end() &&
                std::none_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
    g.edges_ = std::move(edges);
    return g;
  }

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool simple() const { return simple_; }
  int degree(int v) const { return static_cast<int>(incident_[std::size_t(v)].size()); }
  int loops(int v) const { return loops_[std::size_t(v)]; }
  /// One entry per edge endpoint at v; a loop contributes v twice.
  const std::vector<int>& incident(int v) const { return incident_[std::size_t(v)]; }
  /// Distinct non-loop neighbours of v (n <= 64 only).
  VertexMask neighbour_mask(int v) const { return union_[std::size_t(v)]; }

  bool regular(int d) const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != d) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> loops_;
  std::vector<VertexMask> union_;
  bool simple_ = true;
};

/// Collapses each cell of the pairing to a vertex.
inline Multigraph project(const Pairing& p) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(p.points()) / 2);
  for (int a = 0; a < p.points(); ++a) {
    const int b = p.mate[std::size_t(a)];
    if (a < b) edges.emplace_back(p.cell(a), p.cell(b));
  }
  return Multigraph::from_edges(p.n, std::move(edges));
}

inline bool is_connected(const Multigraph& g) {
  std::vector<char> seen(std::size_t(g.n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : g.incident(v)) {
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

struct SimpleSample {
  Multigraph graph;
  std::uint64_t rejections = 0;
};

/// Resamples pairings until the projection is simple.
template <class Engine>
SimpleSample sample_simple_graph(int n, int d, Engine& eng, std::uint64_t max_rejections = 1'000'000) {
  SimpleSample out;
  for (;;) {
    Multigraph g = project(sample_pairing(n, d, eng));
    if (g.simple()) {
      out.graph = std::move(g);
      return out;
    }
    if (++out.rejections > max_rejections)
      throw CapExceeded("sample_simple_graph: rejections", out.rejections, max_rejections);
  }
}

// ---------------------------------------------------------------------------
// Boundaries

struct BoundarySummary {
  int subset_size = 0;
  int vertex_boundary = 0;
  int edge_boundary = 0;

  friend bool operator==(const BoundarySummary&, const BoundarySummary&) = default;
};

inline VertexMask mask_of(std::span<const int> subset, int n) {
  if (n > 64) throw DomainError("vertex subsets are limited to n <= 64");
  VertexMask m = 0;
  for (const int v : subset) {
    if (v < 0 || v >= n) throw DomainError("vertex subset: vertex out of range");
    m |= VertexMask{1} << v;
  }
  return m;
}

inline BoundarySummary boundary_summary(const Multigraph& g, VertexMask subset) {
  if (g.n() > 64) throw DomainError("boundary_summary: limited to n <= 64");
  BoundarySummary b;
  b.subset_size = std::popcount(subset);
  VertexMask touched = 0;
  for (VertexMask rest = subset; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    touched |= g.neighbour_mask(v);
    for (const int w : g.incident(v))
      if (!((subset >> w) & 1)) ++b.edge_boundary;
  }
  b.vertex_boundary = std::popcount(touched & ~subset);
  return b;
}

inline BoundarySummary boundary_summary(const Multigraph& g, std::span<const int> subset) {
  return boundary_summary(g, mask_of(subset, g.n()));
}

inline BoundarySummary boundary_summary(const Pairing& p, VertexMask subset) {
  return boundary_summary(project(p), subset);
}

/// Non-negative exact ratio num / den in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio make(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw DomainError("ratio: denominator must be positive");
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
  }
  double value() const { return double(num) / double(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num == b.num && a.den == b.den; }
  friend auto operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

struct IsoperimetricResult {
  Ratio vertex;  // min |boundary_V U| / |U|
  Ratio edge;    // min |boundary_E U| / |U|
  VertexMask vertex_witness = 0;
  VertexMask edge_witness = 0;
  int max_subset_size = 0;
};

/// Exact vertex and edge isoperimetric numbers over nonempty U with |U| <= floor(u n).
/// Gray-code walk over all 2^n subsets with incremental boundary updates.
inline IsoperimetricResult min_isoperimetric_exhaustive(const Multigraph& g, double u, int cap_n = kDefaultExhaustiveCap) {
  const int n = g.n();
  if (n > cap_n) throw CapExceeded("min_isoperimetric_exhaustive: vertices", std::uint64_t(n), std::uint64_t(cap_n));
  if (n > 62) throw DomainError("min_isoperimetric_exhaustive: limited to n <= 62");
  if (!(u > 0 && u <= 1)) throw DomainError("min_isoperimetric_exhaustive: u must lie in (0, 1]");
  const int max_size = static_cast<int>(std::floor(u * double(n) + 1e-9));
  if (max_size < 1) throw DomainError("min_isoperimetric_exhaustive: floor(u n) must be at least 1");

  // adjacency without loops, as (neighbour, multiplicity)
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> others;
    for (const int w : g.incident(v))
      if (w != v) others.push_back(w);
    std::sort(others.begin(), others.end());
    for (std::size_t i = 0; i < others.size();) {
      std::size_t j = i;
      while (j < others.size() && others[j] == others[i]) ++j;
      adj[std::size_t(v)].emplace_back(others[i], static_cast<int>(j - i));
      i = j;
    }
  }

  std::vector<int> into(std::size_t(n), 0);  // edge endpoints from U landing on each vertex
  VertexMask subset = 0;
  std::int64_t edge_b = 0, vertex_b = 0;
  IsoperimetricResult best;
  best.max_subset_size = max_size;
  bool have = false;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k);
    const std::size_t vi = std::size_t(v);
    const std::int64_t open = g.degree(v) - 2 * g.loops(v) - 2 * into[vi];
    if (!((subset >> v) & 1)) {
      if (into[vi] > 0) --vertex_b;
      edge_b += open;
      for (const auto& [w, mult] : adj[vi]) {
        if (into[std::size_t(w)] == 0 && !((subset >> w) & 1)) ++vertex_b;
        into[std::size_t(w)] += mult;
      }
      subset |= VertexMask{1} << v;
    } else {
      edge_b -= open;
      subset &= ~(VertexMask{1} << v);
      for (const auto& [w, mult] : adj[vi]) {
        into[std::size_t(w)] -= mult;
        if (into[std::size_t(w)] == 0 && !((subset >> w) & 1)) --vertex_b;
      }
      if (into[vi] > 0) ++vertex_b;
    }
    const int size = std::popcount(subset);
    if (size > max_size) continue;
    const Ratio rv{vertex_b, size}, re{edge_b, size};
    if (!have || rv < best.vertex) {
      best.vertex = rv;
      best.vertex_witness = subset;
    }
    if (!have || re < best.edge) {
      best.edge = re;
      best.edge_witness = subset;
    }
    have = true;
  }
  best.vertex = Ratio::make(best.vertex.num, best.vertex.den);
  best.edge = Ratio::make(best.edge.num, best.edge.den);
  return best;
}

// ---------------------------------------------------------------------------
// Boundary signatures

/// Counts of size-un subsets by (vertex boundary, edge boundary).
class SignatureHistogram {
 public:
  SignatureHistogram(int n, int d, int un)
      : n_(n), d_(d), un_(un), counts_(std::size_t(n + 1) * std::size_t(n * d + 1), 0) {}

  int n() const { return n_; }
  int d() const { return d_; }
  int subset_size() const { return un_; }

  void add(int sn, int yn, std::uint64_t times = 1) { counts_[index(sn, yn)] += times; }
  std::uint64_t count(std::int64_t sn, std::int64_t yn) const {
    if (sn < 0 || sn > n_ || yn < 0 || yn > n_ * d_) return 0;
    return counts_[index(int(sn), int(yn))];
  }
  std::uint64_t edge_count(std::int64_t yn) const {
    std::uint64_t total = 0;
    for (int sn = 0; sn <= n_; ++sn) total += count(sn, yn);
    return total;
  }
  std::uint64_t total() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

 private:
  std::size_t index(int sn, int yn) const { return std::size_t(sn) * std::size_t(n_ * d_ + 1) + std::size_t(yn); }

  int n_, d_, un_;
  std::vector<std::uint64_t> counts_;
};

/// Histogram of boundary signatures over all subsets of size un, by combination enumeration.
inline SignatureHistogram signature_histogram(const Multigraph& g, int d, int un, std::uint64_t cap = kDefaultSubsetCap) {
  const int n = g.n();
  if (un < 1 || un > n) throw DomainError("signature_histogram: un must lie in [1, n]");
  if (n > 62) throw DomainError("signature_histogram: limited to n <= 62");
  const BigInt subsets = binomial(n, un);
  if (subsets > cap)
    throw CapExceeded("signature_histogram: subsets", subsets > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max() : subsets.convert_to<std::uint64_t>(), cap);
  SignatureHistogram h(n, d, un);
  const VertexMask limit = VertexMask{1} << n;
  VertexMask s = (VertexMask{1} << un) - 1;
  while (s < limit) {
    const auto b = boundary_summary(g, s);
    h.add(b.vertex_boundary, b.edge_boundary);
    // next subset of the same size (Gosper)
    const VertexMask c = s & (~s + 1);
    const VertexMask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return h;
}

inline SignatureHistogram signature_histogram(const Pairing& p, int un, std::uint64_t cap = kDefaultSubsetCap) {
  return signature_histogram(project(p), p.d, un, cap);
}

/// Number of size-un subsets with vertex boundary sn and edge boundary yn in this pairing.
inline std::uint64_t count_subsets_with_signature(const Pairing& p, std::int64_t un, std::int64_t sn, std::int64_t yn,
                                                  std::uint64_t cap = kDefaultSubsetCap) {
  if (un < 1) throw DomainError("count_subsets_with_signature: subsets must be nonempty (un >= 1)");
  return signature_histogram(p, int(un), cap).count(sn, yn);
}

/// Edge-only variant: size-un subsets with edge boundary yn.
inline std::uint64_t count_subsets_with_edge_signature(const Pairing& p, std::int64_t un, std::int64_t yn,
                                                       std::uint64_t cap = kDefaultSubsetCap) {
  if (un < 1) throw DomainError("count_subsets_with_edge_signature: subsets must be nonempty (un >= 1)");
  return signature_histogram(p, int(un), cap).edge_count(yn);
}

struct Signature {
  std::int64_t un = 1;
  std::optional<std::int64_t> sn;  // empty for the edge-only signature
  std::int64_t yn = 0;
};

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

/// Sample means of several signature counts over the same independent pairings.
/// Sample i uses derive_seed(seed, i); per-worker integer sums make the result
/// independent of the worker count.
inline std::vector<MonteCarloEstimate> monte_carlo_expectations(int n, int d, std::span<const Signature> signatures,
                                                                std::uint64_t samples, std::uint64_t seed,
                                                                unsigned workers = worker_count()) {
  detail::check_pairing_shape(n, d);
  if (samples < 1) throw DomainError("monte_carlo: at least one sample is required");
  std::vector<int> sizes;
  for (const auto& sig : signatures) {
    if (sig.un < 1 || sig.un > n) throw DomainError("monte_carlo: un must lie in [1, n]");
    if (binomial(n, sig.un) > kDefaultSubsetCap)
      throw CapExceeded("monte_carlo: subsets", std::numeric_limits<std::uint64_t>::max(), kDefaultSubsetCap);
    if (std::find(sizes.begin(), sizes.end(), int(sig.un)) == sizes.end()) sizes.push_back(int(sig.un));
  }

  struct Sums {
    std::vector<std::uint64_t> sum, sum_sq;
  };
  const unsigned chunks = std::max(1u, std::min<unsigned>(workers, unsigned(std::min<std::uint64_t>(samples, 1024))));
  auto partial = parallel_map<Sums>(
      chunks,
      [&](std::size_t c) {
        Sums out{std::vector<std::uint64_t>(signatures.size(), 0), std::vector<std::uint64_t>(signatures.size(), 0)};
        const std::uint64_t begin = samples * c / chunks, end = samples * (c + 1) / chunks;
        for (std::uint64_t i = begin; i < end; ++i) {
          std::mt19937_64 eng(derive_seed(seed, i));
          const Multigraph g = project(sample_pairing(n, d, eng));
          for (const int un : sizes) {
            const auto h = signature_histogram(g, d, un);
            for (std::size_t k = 0; k < signatures.size(); ++k) {
              if (signatures[k].un != un) continue;
              const std::uint64_t x = signatures[k].sn ? h.count(*signatures[k].sn, signatures[k].yn) : h.edge_count(signatures[k].yn);
              out.sum[k] += x;
              out.sum_sq[k] += x * x;
            }
          }
        }
        return out;
      },
      workers);

  std::vector<MonteCarloEstimate> est(signatures.size());
  for (std::size_t k = 0; k < signatures.size(); ++k) {
    std::uint64_t sum = 0, sum_sq = 0;
    for (const auto& p : partial) {
      sum += p.sum[k];
      sum_sq += p.sum_sq[k];
    }
    const double m = double(sum) / double(samples);
    double var = 0;
    if (samples > 1) var = std::max(0.0, (double(sum_sq) - double(samples) * m * m) / double(samples - 1));
    est[k] = {m, std::sqrt(var / double(samples)), samples};
  }
  return est;
}

inline MonteCarloEstimate monte_carlo_expectation(int n, int d, std::int64_t un, std::optional<std::int64_t> sn, std::int64_t yn,
                                                  std::uint64_t samples, std::uint64_t seed, unsigned workers = worker_count()) {
  const Signature sig{un, sn, yn};
  return monte_carlo_expectations(n, d, std::span<const Signature>(&sig, 1), samples, seed, workers).front();
}

}  // namespace isoperim
