#pragma once

// Exact first-moment counts in the pairing model: matchings, the boundary
// coefficient [x^yn] ((x+1)^d - 1)^sn, and expected numbers of subsets with a
// prescribed boundary signature as big rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "isoperim/bound_core.hpp"
#include "isoperim/errors.hpp"

namespace isoperim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational input such as s = 1/10.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return double(num) / double(den); }
  /// n * num / den, or a DomainError when it is not an integer.
  std::int64_t scaled(std::int64_t n, const char* what) const {
    if (den <= 0) throw DomainError(std::string(what) + ": denominator must be positive");
    const std::int64_t p = n * num;
    if (p % den != 0)
      throw DomainError(std::string(what) + ": n * " + std::to_string(num) + "/" + std::to_string(den) +
                        " is not an integer for n = " + std::to_string(n));
    return p / den;
  }
};

/// Natural log of a positive big integer via a 53-bit mantissa and binary exponent.
inline double log_big(const BigInt& v) {
  if (v <= 0) throw DomainError("log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + double(shift) * std::numbers::ln2;
}

inline double log_big(const BigRational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return log_big(BigInt(numerator(v))) - log_big(BigInt(denominator(v)));
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Binomial coefficient, zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Number of perfect matchings of two_m points, (2m)! / (m! 2^m).
inline BigInt matchings_count(std::int64_t two_m) {
  if (two_m < 0 || two_m % 2 != 0)
    throw DomainError("matchings_count: number of points must be even and non-negative, got " + std::to_string(two_m));
  BigInt r = 1;
  for (std::int64_t k = 3; k < two_m; k += 2) r *= k;
  return r;
}

struct CoefficientQuery {
  int d = 3;
  std::int64_t sn = 0;  // number of groups
  std::int64_t yn = 0;  // target exponent
};

/// Coefficients of x^0..x^max_y in ((x+1)^d - 1)^sn by truncated dense convolution.
inline std::vector<BigInt> boundary_coefficients(int d, std::int64_t sn, std::int64_t max_y) {
  if (d < 1) throw DomainError("boundary_coefficients: degree must be positive");
  if (sn < 0 || max_y < 0) throw DomainError("boundary_coefficients: counts must be non-negative");
  std::vector<BigInt> row(std::size_t(d) + 1);
  for (int j = 1; j <= d; ++j) row[std::size_t(j)] = binomial(d, j);

  std::vector<BigInt> acc(std::size_t(max_y) + 1);
  acc[0] = 1;
  std::int64_t top = 0;  // highest non-zero degree in acc
  for (std::int64_t g = 0; g < sn; ++g) {
    const std::int64_t new_top = std::min<std::int64_t>(max_y, top + d);
    std::vector<BigInt> next(std::size_t(max_y) + 1);
    for (std::int64_t i = 0; i <= top; ++i) {
      if (acc[std::size_t(i)] == 0) continue;
      for (int j = 1; j <= d && i + j <= new_top; ++j) next[std::size_t(i + j)] += acc[std::size_t(i)] * row[std::size_t(j)];
    }
    acc.swap(next);
    top = new_top;
  }
  return acc;
}

/// Number of ways to pick yn of the sn d items split into sn groups of d with
/// every group hit; zero outside sn <= yn <= d sn.
inline BigInt boundary_coefficient(const CoefficientQuery& q) {
  if (q.d < 1 || q.sn < 0 || q.yn < 0) return 0;
  if (q.yn < q.sn || q.yn > q.d * q.sn) return 0;
  return boundary_coefficients(q.d, q.sn, q.yn)[std::size_t(q.yn)];
}

struct CoefficientBoundCheck {
  double bound = 0;      // x^-yn ((x+1)^d - 1)^sn, +inf when it overflows a double
  double log_bound = 0;
  double log_exact = -std::numeric_limits<double>::infinity();
  bool holds = false;
};

/// Compares the coefficient against its generating-function bound at x > 0 in log space.
inline CoefficientBoundCheck coefficient_upper_bound_check(const CoefficientQuery& q, double x) {
  if (!(x > 0)) throw DomainError("coefficient_upper_bound_check: x must be positive");
  CoefficientBoundCheck c;
  c.log_bound = double(q.sn) * detail::log_hit_polynomial(q.d, x) - double(q.yn) * std::log(x);
  c.bound = std::exp(c.log_bound);
  const BigInt exact = boundary_coefficient(q);
  if (exact == 0) {
    c.holds = true;
    return c;
  }
  c.log_exact = log_big(exact);
  c.holds = c.log_exact <= c.log_bound + 1e-12 * std::max(1.0, std::abs(c.log_bound));
  return c;
}

/// r(n) = C^(1/n) / (x0^-y ((x0+1)^d - 1)^s) for each n, where x0 is the stationary x.
inline std::vector<double> coefficient_asymptotics_check(int d, Fraction s, Fraction y,
                                                         const std::vector<std::int64_t>& n_list) {
  const double sv = s.value(), yv = y.value();
  if (!(sv > 0 && sv < yv && yv < double(d) * sv))
    throw DomainError("coefficient_asymptotics_check: requires 0 < s < y < d s");
  const double x0 = minimizing_x(d, sv, yv).value;
  const double log_rate = sv * detail::log_hit_polynomial(d, x0) - yv * std::log(x0);
  std::vector<double> ratios;
  ratios.reserve(n_list.size());
  for (const std::int64_t n : n_list) {
    const std::int64_t sn = s.scaled(n, "coefficient_asymptotics_check s");
    const std::int64_t yn = y.scaled(n, "coefficient_asymptotics_check y");
    const BigInt c = boundary_coefficient({d, sn, yn});
    ratios.push_back(std::exp(log_big(c) / double(n) - log_rate));
  }
  return ratios;
}

/// Context of an exact expectation: the pairing model size and the boundary signature.
struct SignatureContext {
  std::int64_t n = 0;
  int d = 0;
  std::int64_t un = 0;
  std::int64_t sn = -1;  // -1 for the edge-only signature
  std::int64_t yn = 0;
};

/// Exact expected number of subsets with a given boundary signature in a uniform pairing.
class ExactExpectation {
 public:
  ExactExpectation(BigRational value, SignatureContext context) : value_(std::move(value)), context_(context) {}

  const BigRational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const SignatureContext& context() const { return context_; }
  bool is_zero() const { return value_ == 0; }
  double to_double() const { return value_.convert_to<double>(); }
  /// Natural log; -inf for a zero expectation.
  double log() const { return is_zero() ? -std::numeric_limits<double>::infinity() : log_big(value_); }

 private:
  BigRational value_;
  SignatureContext context_;
};

namespace detail {

inline void require_even(std::int64_t v, const char* term) {
  if (v % 2 != 0) throw DomainError(std::string("signature: parity violation, ") + term + " = " + std::to_string(v) + " is odd");
}

inline void check_model(std::int64_t n, int d, std::int64_t un) {
  if (n < 1 || d < 1) throw DomainError("signature: n and d must be positive");
  if (un < 0 || un > n) throw DomainError("signature: un must lie in [0, n]");
  require_even(std::int64_t(d) * n, "d n");
}

}  // namespace detail

/// Expected number of vertex subsets of size un with vertex boundary sn and edge boundary yn:
/// C binom(n,un) binom(n-un,sn) binom(d un,yn) (yn)! M(d un - yn) M(d n - d un - yn) / M(d n).
inline ExactExpectation expected_vertex_count(std::int64_t n, int d, std::int64_t un, std::int64_t sn, std::int64_t yn) {
  detail::check_model(n, d, un);
  if (sn < 0 || yn < 0) throw DomainError("expected_vertex_count: sn and yn must be non-negative");
  if (un + sn > n) throw DomainError("expected_vertex_count: un + sn exceeds n");
  const std::int64_t inside = std::int64_t(d) * un - yn;
  const std::int64_t outside = std::int64_t(d) * (n - un) - yn;
  detail::require_even(inside, "d un - yn");
  detail::require_even(outside, "d n - d un - yn");
  SignatureContext ctx{n, d, un, sn, yn};
  const BigInt c = boundary_coefficient({d, sn, yn});
  if (c == 0 || inside < 0 || outside < 0) return {BigRational(0), ctx};
  BigInt num = c * binomial(n, un) * binomial(n - un, sn) * binomial(std::int64_t(d) * un, yn) * factorial(yn) *
               matchings_count(inside) * matchings_count(outside);
  return {BigRational(num, matchings_count(std::int64_t(d) * n)), ctx};
}

/// Expected number of vertex subsets of size un with edge boundary yn:
/// binom(n,un) binom(d un,yn) binom(d n - d un,yn) (yn)! M(d un - yn) M(d n - d un - yn) / M(d n).
inline ExactExpectation expected_edge_count(std::int64_t n, int d, std::int64_t un, std::int64_t yn) {
  detail::check_model(n, d, un);
  if (yn < 0) throw DomainError("expected_edge_count: yn must be non-negative");
  const std::int64_t inside = std::int64_t(d) * un - yn;
  const std::int64_t outside = std::int64_t(d) * (n - un) - yn;
  detail::require_even(inside, "d un - yn");
  detail::require_even(outside, "d n - d un - yn");
  SignatureContext ctx{n, d, un, -1, yn};
  if (inside < 0 || outside < 0) return {BigRational(0), ctx};
  BigInt num = binomial(n, un) * binomial(std::int64_t(d) * un, yn) * binomial(std::int64_t(d) * (n - un), yn) *
               factorial(yn) * matchings_count(inside) * matchings_count(outside);
  return {BigRational(num, matchings_count(std::int64_t(d) * n)), ctx};
}

/// True when the signature satisfies the parity and range constraints of the pairing model.
inline bool vertex_signature_admissible(std::int64_t n, int d, std::int64_t un, std::int64_t sn, std::int64_t yn) {
  if (std::int64_t(d) * n % 2 != 0 || un < 0 || un > n || sn < 0 || yn < 0 || un + sn > n) return false;
  const std::int64_t inside = std::int64_t(d) * un - yn;
  const std::int64_t outside = std::int64_t(d) * (n - un) - yn;
  return inside >= 0 && outside >= 0 && inside % 2 == 0 && outside % 2 == 0;
}

inline bool edge_signature_admissible(std::int64_t n, int d, std::int64_t un, std::int64_t yn) {
  return vertex_signature_admissible(n, d, un, 0, yn);
}

struct ConvergencePoint {
  std::int64_t n = 0;
  double log_expectation_per_n = 0;  // (1/n) log E
  double exponent = 0;               // limiting exponent
  double gap = 0;                    // difference of the two
};

/// (1/n) log E(X) against the vertex exponent at the stationary x, for each n.
inline std::vector<ConvergencePoint> exponent_convergence_check(int d, Fraction u, Fraction s, Fraction y,
                                                                const std::vector<std::int64_t>& n_list) {
  const double uv = u.value(), sv = s.value(), yv = y.value();
  if (!(sv > 0 && sv < yv && yv < double(d) * sv))
    throw DomainError("exponent_convergence_check: requires 0 < s < y < d s");
  const double exponent = vertex_exponent(d, ExponentPoint{uv, sv, yv, minimizing_x(d, sv, yv).value});
  std::vector<ConvergencePoint> out;
  for (const std::int64_t n : n_list) {
    const auto e = expected_vertex_count(n, d, u.scaled(n, "u"), s.scaled(n, "s"), y.scaled(n, "y"));
    const double per_n = e.log() / double(n);
    out.push_back({n, per_n, exponent, per_n - exponent});
  }
  return out;
}

/// Edge analogue: (1/n) log E(X) against the edge exponent.
inline std::vector<ConvergencePoint> edge_exponent_convergence_check(int d, Fraction u, Fraction y,
                                                                     const std::vector<std::int64_t>& n_list) {
  const double exponent = edge_exponent(d, u.value(), y.value());
  std::vector<ConvergencePoint> out;
  for (const std::int64_t n : n_list) {
    const auto e = expected_edge_count(n, d, u.scaled(n, "u"), y.scaled(n, "y"));
    const double per_n = e.log() / double(n);
    out.push_back({n, per_n, exponent, per_n - exponent});
  }
  return out;
}

}  // namespace isoperim
