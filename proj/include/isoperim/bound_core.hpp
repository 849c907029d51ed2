#pragma once

// First-moment exponents for subsets of a random d-regular graph and the
// expansion lower bounds derived from their zeros.
//
// Notation used throughout, per vertex count n:
//   u  fraction of vertices inside the subset U,
//   s  fraction of vertices on the vertex boundary of U,
//   y  number of boundary edges divided by n,
//   x  free parameter of the generating-function bound on the number of ways
//      to place y n boundary edges on s n boundary vertices, each hit at least once.
//
// Every function is templated on the floating type; double is the default and
// long double gives extended precision for the same code path.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "isoperim/errors.hpp"
#include "isoperim/root_finding.hpp"

namespace isoperim {

template <std::floating_point Real>
struct BasicBoundQuery {
  int d = 3;
  Real u = Real(0.5);
  Real tol = Real(1e-12);
  int max_iter = 200;

  void validate() const {
    if (d < 3) throw DomainError("degree d must be at least 3, got " + std::to_string(d));
    if (!(u > 0 && u <= Real(0.5))) throw DomainError("fraction u must lie in (0, 1/2]");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  }

  Real du() const { return Real(d) * u; }
  /// Location of the maximum of the profile exponent, d u (1 - u).
  Real mode() const { return Real(d) * u * (1 - u); }
};

template <std::floating_point Real>
struct BasicExponentPoint {
  Real u = 0;
  Real s = 0;
  Real y = 0;
  Real x = 1;
};

using BoundQuery = BasicBoundQuery<double>;
using ExponentPoint = BasicExponentPoint<double>;

/// A bound together with the root that produced it.
template <std::floating_point Real>
struct BasicBoundResult {
  Real value = 0;
  BasicRootResult<Real> root;
};

using BoundResult = BasicBoundResult<double>;

/// Maximum of a function over a two-dimensional interior grid.
struct ScanReport {
  double max_value = -std::numeric_limits<double>::infinity();
  double first = 0;   // u for the vertex scan, r for the edge scan
  double second = 0;  // r for the vertex scan, w for the edge scan
  int first_index = 0;
  int second_index = 0;
  int grid = 0;
  double margin = 0;
  bool passed = false;
};

inline constexpr double kScanMargin = 1e-3;
inline constexpr double kScanPassThreshold = -1e-9;

namespace detail {

/// a log a with 0 log 0 = 0; negative arguments are invalid points.
template <std::floating_point Real>
Real xlogx(Real a, const char* term) {
  if (a < 0) throw DomainError(std::string("invalid point: negative argument in ") + term);
  if (a == 0) return 0;
  return a * std::log(a);
}

/// m log a, zero when m == 0; a must be clearly positive otherwise.
template <std::floating_point Real>
Real mul_log(Real m, Real a, const char* term) {
  if (m == 0) return 0;
  if (!(a > Real(1e-300))) throw DomainError(std::string("invalid point: log of non-positive value in ") + term);
  return m * std::log(a);
}

/// log((x + 1)^d - 1) for x > 0 without overflow at large d.
template <std::floating_point Real>
Real log_hit_polynomial(int d, Real x) {
  const Real t = Real(d) * std::log1p(x);
  if (t > Real(30)) return t + std::log1p(-std::exp(-t));
  return std::log(std::expm1(t));
}

/// log(2^d - 1) = d log 2 + log1p(-2^-d).
template <std::floating_point Real>
Real log_two_pow_minus_one(int d) {
  return Real(d) * std::numbers::ln2_v<Real> + std::log1p(-std::exp2(-Real(d)));
}

/// x d (x+1)^(d-1) / ((x+1)^d - 1): increases from 1 (x -> 0) to d (x -> inf).
template <std::floating_point Real>
Real stationarity_ratio(int d, Real x) {
  const Real tail = -std::expm1(-Real(d) * std::log1p(x));  // 1 - (x+1)^-d
  return Real(d) * x / ((1 + x) * tail);
}

template <std::floating_point Real>
Real slack(Real scale) {
  return Real(64) * std::numeric_limits<Real>::epsilon() * std::max(Real(1), std::abs(scale));
}

template <std::floating_point Real>
void check_point(int d, const BasicExponentPoint<Real>& p) {
  if (d < 1) throw DomainError("invalid point: degree must be positive");
  if (!(p.u > 0 && p.u <= Real(0.5))) throw DomainError("invalid point: u must lie in (0, 1/2]");
  if (!(p.s >= 0 && p.s <= 1 - p.u + slack(Real(1)))) throw DomainError("invalid point: s must lie in [0, 1-u]");
  const Real du = Real(d) * p.u;
  const Real y_cap = std::min(Real(d) * p.s, du);
  if (!(p.y >= 0 && p.y <= y_cap + slack(y_cap))) throw DomainError("invalid point: y must lie in [0, min(d s, d u)]");
}

/// The exponent without the two x-dependent terms.
template <std::floating_point Real>
Real vertex_exponent_base(int d, Real u, Real s, Real y) {
  const Real dd = Real(d);
  const Real du = dd * u;
  const Real outer = std::max(Real(0), dd - du - y);
  const Real inner = std::max(Real(0), du - y);
  const Real rest = std::max(Real(0), 1 - u - s);
  return xlogx(du, "d u") + xlogx(outer, "d - d u - y") / 2 - xlogx(u, "u") - xlogx(s, "s") -
         xlogx(rest, "1 - u - s") - xlogx(inner, "d u - y") / 2 - dd * std::log(dd) / 2;
}

/// s log((x+1)^d - 1) - y log x.
template <std::floating_point Real>
Real vertex_exponent_x_part(int d, Real s, Real y, Real x) {
  Real v = 0;
  if (s != 0) {
    if (!(x > Real(1e-300))) throw DomainError("invalid point: x must be positive when s > 0");
    v += s * log_hit_polynomial(d, x);
  }
  v -= mul_log(y, x, "y log x");
  return v;
}

}  // namespace detail

/// Log-exponent of the expected number of subsets with boundary profile (u, s, y),
/// bounded through the coefficient estimate at parameter x.
template <std::floating_point Real>
Real vertex_exponent(int d, const BasicExponentPoint<Real>& p) {
  detail::check_point(d, p);
  return detail::vertex_exponent_base(d, p.u, p.s, p.y) + detail::vertex_exponent_x_part(d, p.s, p.y, p.x);
}

/// The x at which the exponent is stationary in y: sqrt((du - y) / (d - du - y)).
template <std::floating_point Real>
Real balancing_x(const BasicBoundQuery<Real>& q, Real y) {
  q.validate();
  const Real du = q.du();
  if (!(y >= 0 && y < du)) throw DomainError("balancing_x: y must lie in [0, d u)");
  const Real outer = Real(q.d) - du - y;
  if (!(outer > 0)) throw DomainError("balancing_x: y must be below d - d u");
  return std::sqrt((du - y) / outer);
}

/// The vertex-boundary fraction s for which x is the stationary point in x,
/// s = y ((x+1)^d - 1) / (x d (x+1)^(d-1)).
template <std::floating_point Real>
Real matched_boundary(int d, Real y, Real x) {
  if (d < 1) throw DomainError("matched_boundary: degree must be positive");
  if (!(x > 0)) throw DomainError("matched_boundary: x must be positive");
  if (!(y >= 0)) throw DomainError("matched_boundary: y must be non-negative");
  return y / detail::stationarity_ratio(d, x);
}

/// Vertex-boundary fraction along the profile curve, s(y) = matched_boundary(y, balancing_x(y)).
template <std::floating_point Real>
Real profile_boundary(const BasicBoundQuery<Real>& q, Real y) {
  return matched_boundary(q.d, y, balancing_x(q, y));
}

/// Right end of the profile curve's domain: the y in (mode, d u] where the
/// profile boundary reaches 1 - u, or d u if it never does.
template <std::floating_point Real>
Real profile_domain_end(const BasicBoundQuery<Real>& q) {
  q.validate();
  const Real cap = 1 - q.u;
  const Real top = q.du() * (1 - Real(1e-12));
  auto f = [&](Real y) { return profile_boundary(q, y) - cap; };
  if (f(top) <= 0) return q.du();
  return bisect<Real>(f, q.mode(), top, q.tol, q.max_iter, "profile_domain_end").bracket_lo;
}

/// Exponent along the profile curve. Unimodal in y with its maximum,
/// the binary entropy of u, at y = d u (1 - u).
template <std::floating_point Real>
Real profile_exponent(const BasicBoundQuery<Real>& q, Real y) {
  q.validate();
  if (!(y > 0 && y < q.du())) throw DomainError("profile_exponent: y must lie in (0, d u)");
  const Real x = balancing_x(q, y);
  const Real s = matched_boundary(q.d, y, x);
  return vertex_exponent(q.d, BasicExponentPoint<Real>{q.u, s, y, x});
}

/// The unique x > 0 with s d (x+1)^(d-1) / ((x+1)^d - 1) = y / x. The returned
/// residual is s x d (x+1)^(d-1) / ((x+1)^d - 1) - y. Exists only for s < y < d s.
template <std::floating_point Real>
BasicRootResult<Real> minimizing_x(int d, Real s, Real y, Real tol = Real(1e-12), int max_iter = 400) {
  if (d < 2) throw DomainError("minimizing_x: degree must be at least 2");
  if (!(s > 0)) throw DomainError("minimizing_x: s must be positive");
  if (!(y >= s && y <= Real(d) * s)) throw DomainError("minimizing_x: no root, y must lie in [s, d s]");
  if (y == s) throw RootNotBracketed("minimizing_x: y = s sends the root to x = 0", 0.0, 0.0, 0.0, 0.0);
  if (y == Real(d) * s)
    throw RootNotBracketed("minimizing_x: y = d s sends the root to infinity", 0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0);
  auto residual = [&](Real log_x) { return s * detail::stationarity_ratio(d, std::exp(log_x)) - y; };

  // Bracket in log x; the ratio runs from 1 to d, so the bracket is finite only
  // strictly inside (s, d s).
  constexpr Real kLogCap = Real(690);
  Real lo = 0, hi = 0;
  Real f_lo = residual(lo), f_hi = f_lo;
  while (f_lo > 0) {
    hi = lo;
    f_hi = f_lo;
    lo -= 1;
    if (lo < -kLogCap) throw RootNotBracketed("minimizing_x: root below bracket cap", double(std::exp(lo)), double(std::exp(hi)), double(f_lo), double(f_hi));
    f_lo = residual(lo);
  }
  while (f_hi < 0) {
    lo = hi;
    f_lo = f_hi;
    hi += 1;
    if (hi > kLogCap) throw RootNotBracketed("minimizing_x: root beyond bracket cap", double(std::exp(lo)), double(std::exp(hi)), double(f_lo), double(f_hi));
    f_hi = residual(hi);
  }
  if (lo == hi) return {std::exp(lo), std::exp(lo), std::exp(lo), 0, 0, 0, true};
  // tol on log x is a relative tolerance on x.
  auto r = bisect<Real>(residual, lo, hi, tol, max_iter, "minimizing_x");
  r.value = std::exp(r.value);
  r.bracket_lo = std::exp(r.bracket_lo);
  r.bracket_hi = std::exp(r.bracket_hi);
  r.slope_scale = r.bracket_hi > r.bracket_lo
                      ? std::abs(s * detail::stationarity_ratio(d, r.bracket_hi) - s * detail::stationarity_ratio(d, r.bracket_lo)) /
                            (r.bracket_hi - r.bracket_lo)
                      : Real(0);
  return r;
}

/// The zero of the profile exponent below its mode, found by bisection on
/// [1e-9 mode, mode]; the sign at both ends is checked before bisecting.
template <std::floating_point Real>
BasicRootResult<Real> profile_zero(const BasicBoundQuery<Real>& q) {
  q.validate();
  const Real mode = q.mode();
  const Real lo = Real(1e-9) * mode;
  auto f = [&](Real y) { return profile_exponent(q, y); };
  const Real f_lo = f(lo), f_hi = f(mode);
  if (!(f_lo < 0) || !(f_hi > 0))
    throw RootNotBracketed("profile_zero: expected negative exponent near 0 and positive at the mode", double(lo), double(mode), double(f_lo), double(f_hi));
  return bisect<Real>(f, lo, mode, q.tol, q.max_iter, "profile_zero");
}

/// Vertex expansion bound for subsets of size ~ u n: profile_boundary(profile_zero) / u.
template <std::floating_point Real>
BasicBoundResult<Real> vertex_bound_detailed(const BasicBoundQuery<Real>& q) {
  const auto root = profile_zero(q);
  return {profile_boundary(q, root.value) / q.u, root};
}

template <std::floating_point Real>
Real vertex_bound(const BasicBoundQuery<Real>& q) {
  return vertex_bound_detailed(q).value;
}

/// Exponent at u = 1/2, x = 1 as a function of s alone:
/// s log(2^d - 1) - (d/2 + s - 1) log 2 - (1/2 - s) log(1 - 2s) - s log s.
template <std::floating_point Real>
Real half_exponent(int d, Real s) {
  if (!(s >= 0 && s <= Real(0.5))) throw DomainError("half_exponent: s must lie in [0, 1/2]");
  const Real ln2 = std::numbers::ln2_v<Real>;
  return s * detail::log_two_pow_minus_one<Real>(d) - (Real(d) / 2 + s - 1) * ln2 -
         detail::xlogx(1 - 2 * s, "1 - 2s") / 2 - detail::xlogx(s, "s");
}

/// Vertex isoperimetric bound at u = 1/2: twice the smallest positive root of
/// half_exponent(d, .), bracketed by (0, (d-2)/(2(d-1))).
template <std::floating_point Real = double>
BasicBoundResult<Real> vertex_bound_half_detailed(int d, Real tol = Real(1e-12), int max_iter = 200) {
  if (d < 3) throw DomainError("vertex_bound_half: degree d must be at least 3");
  if (!(tol > 0)) throw DomainError("vertex_bound_half: tolerance must be positive");
  const Real hi = Real(d - 2) / (2 * Real(d - 1));
  auto f = [&](Real s) { return half_exponent(d, s); };
  auto root = bisect<Real>(f, Real(0), hi, tol, max_iter, "vertex_bound_half");
  return {2 * root.value, root};
}

template <std::floating_point Real = double>
Real vertex_bound_half(int d, Real tol = Real(1e-12)) {
  return vertex_bound_half_detailed<Real>(d, tol).value;
}

/// Exponent maximised over y in [s, min(d s, d u)] after minimising over x > 0.
/// The x-minimisation uses minimizing_x in the interior and the limits
/// s log d (y = s) and 0 (y = d s) at the ends; the y-maximisation scans a
/// grid and refines the best cell by golden-section search.
template <std::floating_point Real>
Real max_min_exponent(const BasicBoundQuery<Real>& q, Real s, int grid = 256) {
  q.validate();
  if (grid < 16) throw DomainError("max_min_exponent: grid must be at least 16");
  if (s == 0) return vertex_exponent(q.d, BasicExponentPoint<Real>{q.u, 0, 0, 1});
  if (!(s > 0 && s < 1 - q.u)) throw DomainError("max_min_exponent: s must lie in (0, 1 - u)");
  const Real du = q.du();
  if (s > du) throw DomainError("max_min_exponent: no admissible y, s exceeds d u");
  const int d = q.d;
  const Real y_lo = s;
  const Real y_hi = std::min(Real(d) * s, du);

  auto min_over_x = [&](Real y) {
    const Real base = detail::vertex_exponent_base(d, q.u, s, y);
    if (y - s <= detail::slack(s)) return base + s * std::log(Real(d));
    if (Real(d) * s - y <= detail::slack(Real(d) * s)) return base;
    const auto x0 = minimizing_x(d, s, y, q.tol, 4 * q.max_iter);
    return base + detail::vertex_exponent_x_part(d, s, y, x0.value);
  };

  if (y_hi <= y_lo) return min_over_x(y_lo);
  const Real step = (y_hi - y_lo) / Real(grid - 1);
  int best = 0;
  Real best_value = -std::numeric_limits<Real>::infinity();
  for (int i = 0; i < grid; ++i) {
    const Real y = (i == grid - 1) ? y_hi : y_lo + step * Real(i);
    const Real v = min_over_x(y);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  Real a = y_lo + step * Real(std::max(0, best - 1));
  Real b = std::min(y_hi, y_lo + step * Real(std::min(grid - 1, best + 1)));
  const Real inv_phi = (std::sqrt(Real(5)) - 1) / 2;
  Real c = b - inv_phi * (b - a), e = a + inv_phi * (b - a);
  Real fc = min_over_x(c), fe = min_over_x(e);
  for (int it = 0; it < 200 && b - a > q.tol * std::max(Real(1), b); ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = min_over_x(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = min_over_x(e);
    }
  }
  return std::max({best_value, fc, fe});
}

/// Exponent maximised over y in [s, min(d s, d u)] at x = 1. Its y-derivative is
/// log balancing_x(y) <= 0, so the maximum sits at y = s.
template <std::floating_point Real>
Real max_exponent_at_unit_x(const BasicBoundQuery<Real>& q, Real s) {
  q.validate();
  if (!(s > 0 && s < 1 - q.u)) throw DomainError("max_exponent_at_unit_x: s must lie in (0, 1 - u)");
  if (s > q.du()) throw DomainError("max_exponent_at_unit_x: no admissible y, s exceeds d u");
  return vertex_exponent(q.d, BasicExponentPoint<Real>{q.u, s, s, 1});
}

/// Scans g(u, r) = vertex_exponent(u, r u, r u, 1) over u in [m, 1/2 - m],
/// r in [0, A - m], where A is the u = 1/2 vertex bound and m the margin.
inline ScanReport scan_vertex_negativity(int d, int grid = 128, double margin = kScanMargin) {
  if (d < 3) throw DomainError("scan_vertex_negativity: degree d must be at least 3");
  if (grid < 2) throw DomainError("scan_vertex_negativity: grid must be at least 2");
  const double r_max = vertex_bound_half(d) - margin;
  const double u_lo = margin, u_hi = 0.5 - margin;
  ScanReport rep;
  rep.grid = grid;
  rep.margin = margin;
  for (int i = 0; i < grid; ++i) {
    const double u = u_lo + (u_hi - u_lo) * double(i) / double(grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double r = r_max * double(j) / double(grid - 1);
      const double g = vertex_exponent(d, ExponentPoint{u, r * u, r * u, 1.0});
      if (g > rep.max_value) {
        rep.max_value = g;
        rep.first = u;
        rep.second = r;
        rep.first_index = i;
        rep.second_index = j;
      }
    }
  }
  rep.passed = rep.max_value < kScanPassThreshold;
  return rep;
}

/// Log-exponent of the expected number of subsets of size u n with y n boundary edges.
template <std::floating_point Real>
Real edge_exponent(int d, Real u, Real y) {
  if (d < 1) throw DomainError("edge_exponent: degree must be positive");
  if (!(u > 0 && u <= Real(0.5))) throw DomainError("edge_exponent: u must lie in (0, 1/2]");
  const Real dd = Real(d);
  const Real du = dd * u;
  if (!(y >= 0 && y < du)) throw DomainError("edge_exponent: y must lie in [0, d u)");
  return detail::xlogx(du, "d u") + detail::xlogx(dd - du, "d - d u") - detail::xlogx(u, "u") -
         detail::xlogx(1 - u, "1 - u") - detail::xlogx(y, "y") -
         (detail::xlogx(du - y, "d u - y") + detail::xlogx(dd - du - y, "d - d u - y") + dd * std::log(dd)) / 2;
}

/// Edge isoperimetric bound: the smallest zero of edge_exponent(d, u, .) divided by u.
/// Concavity puts it inside (0, d u (1 - u)], where the exponent is the binary entropy.
template <std::floating_point Real>
BasicBoundResult<Real> edge_bound_detailed(const BasicBoundQuery<Real>& q) {
  q.validate();
  const Real mode = q.mode();
  auto f = [&](Real y) { return edge_exponent(q.d, q.u, y); };
  auto root = bisect<Real>(f, Real(0), mode, q.tol, q.max_iter, "edge_bound");
  if (root.value < mode && !(f((root.value + mode) / 2) > 0))
    throw RootNotBracketed("edge_bound: exponent not positive above the root", double(root.value), double(mode),
                           double(root.residual), double(f((root.value + mode) / 2)));
  return {root.value / q.u, root};
}

template <std::floating_point Real>
Real edge_bound(const BasicBoundQuery<Real>& q) {
  return edge_bound_detailed(q).value;
}

/// (d/2) log d + (d-1) u log u + (d-1)(1-u) log(1-u)
///   - ((du-y)/2) log(du-y) - ((d-du-y)/2) log(d-du-y) - y log y.
template <std::floating_point Real>
Real edge_product_form(int d, Real u, Real y) {
  const Real dd = Real(d);
  const Real du = dd * u;
  if (!(y >= 0 && y < du)) throw DomainError("edge_product_form: y must lie in [0, d u)");
  return dd * std::log(dd) / 2 + (dd - 1) * detail::xlogx(u, "u") + (dd - 1) * detail::xlogx(1 - u, "1 - u") -
         detail::xlogx(du - y, "d u - y") / 2 - detail::xlogx(dd - du - y, "d - d u - y") / 2 - detail::xlogx(y, "y");
}

/// Edge bound from the product-form equation: smallest positive root y located by
/// a coarse scan of (0, d u) for the first sign change, then bisection.
template <std::floating_point Real>
BasicBoundResult<Real> edge_bound_product_form_detailed(int d, Real u, Real tol = Real(1e-12), int max_iter = 200) {
  BasicBoundQuery<Real>{d, u, tol, max_iter}.validate();
  const Real du = Real(d) * u;
  constexpr int kScan = 256;
  Real prev = 0;
  for (int k = 1; k < kScan; ++k) {
    const Real y = du * Real(k) / Real(kScan);
    if (edge_product_form(d, u, y) >= 0) {
      auto f = [&](Real t) { return edge_product_form(d, u, t); };
      auto root = bisect<Real>(f, prev, y, tol, max_iter, "edge_bound_product_form");
      return {root.value / u, root};
    }
    prev = y;
  }
  throw RootNotBracketed("edge_bound_product_form: no sign change on (0, d u)", 0.0, double(du), 0.0, 0.0);
}

template <std::floating_point Real>
Real edge_bound_product_form(int d, Real u, Real tol = Real(1e-12)) {
  return edge_bound_product_form_detailed(d, u, tol).value;
}

/// Scans g(r, w) = edge_exponent(w, r w) over r in [0, B - m], w in [m, u],
/// where B is the edge bound at u and m the margin.
inline ScanReport scan_edge_negativity(int d, double u, int grid = 128, double margin = kScanMargin) {
  BoundQuery q{d, u};
  q.validate();
  if (grid < 2) throw DomainError("scan_edge_negativity: grid must be at least 2");
  const double r_max = edge_bound(q) - margin;
  ScanReport rep;
  rep.grid = grid;
  rep.margin = margin;
  for (int i = 0; i < grid; ++i) {
    const double r = r_max * double(i) / double(grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double w = margin + (u - margin) * double(j) / double(grid - 1);
      const double g = edge_exponent(d, w, r * w);
      if (g > rep.max_value) {
        rep.max_value = g;
        rep.first = r;
        rep.second = w;
        rep.first_index = i;
        rep.second_index = j;
      }
    }
  }
  rep.passed = rep.max_value < kScanPassThreshold;
  return rep;
}

/// Binary entropy in nats.
template <std::floating_point Real>
Real binary_entropy(Real u) {
  if (!(u >= 0 && u <= 1)) throw DomainError("binary_entropy: u must lie in [0, 1]");
  return -detail::xlogx(u, "u") - detail::xlogx(1 - u, "1 - u");
}

/// Leading-order large-d vertex bound at u = 1/2: 1 - 2/d.
inline double asymptotic_vertex_half(int d) {
  if (d < 3) throw DomainError("asymptotic_vertex_half: degree d must be at least 3");
  return 1.0 - 2.0 / double(d);
}

/// Coefficient of sqrt(d) in the large-d edge bound: 2 (1 - u) sqrt(H(u)).
inline double edge_deviation_coefficient(double u) {
  if (!(u > 0 && u < 1)) throw DomainError("edge_deviation_coefficient: u must lie in (0, 1)");
  return 2.0 * (1.0 - u) * std::sqrt(binary_entropy(u));
}

/// Large-d edge bound d (1 - u) - 2 (1 - u) sqrt(d H(u)).
inline double asymptotic_edge(int d, double u) {
  BoundQuery{d, u}.validate();
  return double(d) * (1.0 - u) - edge_deviation_coefficient(u) * std::sqrt(double(d));
}

/// Vertex bound from the second-eigenvalue estimate 2 sqrt(d - 1):
/// 1 / (u (1 - a) + a) - 1 with a = 4 (d - 1) / d^2.
inline double spectral_vertex_bound(int d, double u) {
  BoundQuery{d, u}.validate();
  const double a = 4.0 * double(d - 1) / (double(d) * double(d));
  return 1.0 / (u * (1.0 - a) + a) - 1.0;
}

/// Diameter bound 2 log_{1 + iv}(n / 2) for a graph with vertex isoperimetric number iv.
inline double diameter_upper_bound(long long n, double iv) {
  if (n < 2) throw DomainError("diameter_upper_bound: n must be at least 2");
  if (!(iv > 0)) throw DomainError("diameter_upper_bound: isoperimetric number must be positive");
  return 2.0 * std::log(double(n) / 2.0) / std::log1p(iv);
}

}  // namespace isoperim
