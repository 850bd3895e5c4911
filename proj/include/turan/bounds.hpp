#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/error.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// Exponents are compared exactly; magnitudes are doubles with a 1e-9
// relative-accuracy contract.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace detail {

inline void require(bool ok, const char* precondition) {
  if (!ok) throw NotApplicable(precondition);
}

}  // namespace detail

// Growth exponent of the probabilistic lower bound: r-1 + (q+r)/(k-1).
inline Rational lower_exponent(const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  return Rational(p.r - 1) + Rational(p.q + p.r, p.k - 1);
}

// Graph case: C n^(1+1/h) + (q+2) n with h = floor(k/(q+3)), C = (q+2)^(1/h).
inline double graph_upper(std::size_t n, int k, int q) {
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= 2 * q + 6, "k >= 2q+6");
  detail::require(n >= static_cast<std::size_t>(k), "n >= k");
  const int h = k / (q + 3);
  const double C = std::pow(static_cast<double>(q + 2), 1.0 / h);
  const double nn = static_cast<double>(n);
  return C * std::pow(nn, 1.0 + 1.0 / h) + (q + 2) * nn;
}

inline Rational graph_upper_exponent(int k, int q) {
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= 2 * q + 6, "k >= 2q+6");
  return Rational(1) + Rational(1, k / (q + 3));
}

// Hypergraph case through the link of a best (r-2)-set:
// (2C'/r!) n^(r-1+1/h') + (2(q+r)/r!) n^(r-1), h' = floor(k/(q+r+1)),
// C' = (q+r)^(1/h'). The multihypergraph variant has the same value.
inline double hypergraph_upper(std::size_t n, const ParamTriple& params) {
  const auto [r, k, q] = params;
  detail::require(r >= 2, "r >= 2");
  detail::require(q >= -r + 1, "q >= -r+1");
  detail::require(k >= 2 * q + 2 * r + 2, "k >= 2q+2r+2");
  detail::require(n >= static_cast<std::size_t>(k), "n >= k");
  const int h = k / (q + r + 1);
  const double C = std::pow(static_cast<double>(q + r), 1.0 / h);
  const double nn = static_cast<double>(n);
  const double rf = factorial(r);
  return 2.0 * C / rf * std::pow(nn, r - 1 + 1.0 / h) + 2.0 * (q + r) / rf * std::pow(nn, r - 1);
}

inline Rational hypergraph_upper_exponent(const ParamTriple& params) {
  const auto [r, k, q] = params;
  detail::require(r >= 2, "r >= 2");
  detail::require(q >= -r + 1, "q >= -r+1");
  detail::require(k >= 2 * q + 2 * r + 2, "k >= 2q+2r+2");
  return Rational(r - 1) + Rational(1, k / (q + r + 1));
}

// Batch-code bound: (2C''/r!) n^(r-1+1/h) + (2/(r-1)!) n^(r-1),
// h = floor(k/(r+1)), C'' = r^(1/h).
inline double cbc_upper(std::size_t n, int r, int k) {
  detail::require(r >= 2, "r >= 2");
  detail::require(k >= 2 * r + 2, "k >= 2r+2");
  detail::require(n >= static_cast<std::size_t>(k), "n >= k");
  const int h = k / (r + 1);
  const double C = std::pow(static_cast<double>(r), 1.0 / h);
  const double nn = static_cast<double>(n);
  return 2.0 * C / factorial(r) * std::pow(nn, r - 1 + 1.0 / h) + 2.0 / factorial(r - 1) * std::pow(nn, r - 1);
}

inline Rational cbc_upper_exponent(int r, int k) {
  detail::require(r >= 2, "r >= 2");
  detail::require(k >= 2 * r + 2, "k >= 2r+2");
  return Rational(r - 1) + Rational(1, k / (r + 1));
}

// Earlier batch-code exponent r - 1/2^(r-1), kept for comparison tables.
inline Rational competing_exponent_bb(int r) {
  detail::require(r >= 3, "r >= 3");
  detail::require(r < 62, "r < 62");
  return Rational(r) - Rational(1, std::int64_t{1} << (r - 1));
}

// Smallest size of a forbidden graph: min i with q+3 <= i <= C(i-q-1, 2),
// or nothing when no such i is at most k (then no forbidden graph exists).
inline std::optional<int> z_value(int k, int q) {
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= q + 3, "k >= q+3");
  for (int i = q + 3; i <= k; ++i) {
    if (static_cast<std::uint64_t>(i) <= binomial(i - q - 1, 2)) return i;
  }
  return std::nullopt;
}

// (k-1) * C(n-1, r-1): how far the F- and H-Turan numbers can drift apart.
inline std::uint64_t diff_upper_general(std::size_t n, int r, int k, int q) {
  detail::require(r >= 2, "r >= 2");
  detail::require(q + r + 1 >= 2, "q+r+1 >= 2");
  detail::require(k >= q + r + 1, "k >= q+r+1");
  detail::require(n >= static_cast<std::size_t>(k), "n >= k");
  return static_cast<std::uint64_t>(k - 1) * binomial(static_cast<std::int64_t>(n) - 1, r - 1);
}

// Leading terms of the graph bound on f(n, v, k); the additive constant D
// is only known to exist and is not included.
inline double f_upper_r2(std::size_t n, int v, int k) {
  detail::require(v >= 2, "v >= 2");
  detail::require(v <= k, "v <= k");
  const int h = k / (k - v + 2);
  const double C = std::pow(static_cast<double>(k - v + 1), 1.0 / h);
  const double nn = static_cast<double>(n);
  return C * std::pow(nn, 1.0 + 1.0 / h) + (k - v + 1) * nn;
}

struct FUpperGeneral {
  double leading = 0.0;      // (2C/r!) n^(r-1+1/h)
  double lower_order = 0.0;  // (2(q+r)/r!) n^(r-1) + (k-1) C(n-1, r-1), q = k-v-1
  double total() const { return leading + lower_order; }
};

inline FUpperGeneral f_upper_general(std::size_t n, int r, int v, int k) {
  detail::require(r >= 2, "r >= 2");
  detail::require(2 * v >= k + 2 * r, "v >= (k+2r)/2");
  detail::require(v <= k + r - 2, "v <= k+r-2");
  detail::require(n >= static_cast<std::size_t>(k), "n >= k");
  const int q = k - v - 1;
  const int h = k / (k + r - v);
  const double C = std::pow(static_cast<double>(k + r - v - 1), 1.0 / h);
  const double nn = static_cast<double>(n);
  const double rf = factorial(r);
  FUpperGeneral out;
  out.leading = 2.0 * C / rf * std::pow(nn, r - 1 + 1.0 / h);
  out.lower_order = 2.0 * (q + r) / rf * std::pow(nn, r - 1) +
                    static_cast<double>(k - 1) * static_cast<double>(binomial(static_cast<std::int64_t>(n) - 1, r - 1));
  return out;
}

// Truncated estimate of the graph difference constant:
// max({z/(z-q-1) n - ex(n) + 1 : 1 <= n <= n_max} u {1}).
// `ex` maps n to the exact H(k,q) Turan number on n vertices.
struct DEstimate {
  double value = 1.0;
  std::optional<std::size_t> attained_at;  // empty when the floor 1 wins
  std::optional<int> z;
};

template <typename ExFn>
DEstimate d_constant_estimate(int k, int q, std::size_t n_max, ExFn&& ex) {
  DEstimate out;
  out.z = z_value(k, q);
  if (!out.z) return out;
  const double ratio = static_cast<double>(*out.z) / static_cast<double>(*out.z - q - 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double term = ratio * static_cast<double>(n) - static_cast<double>(ex(n)) + 1.0;
    if (term > out.value) {
      out.value = term;
      out.attained_at = n;
    }
  }
  return out;
}

// Every closed-form bound at one grid point. Each entry is either a value or
// the name of the first violated precondition.
template <typename T>
struct Evaluated {
  std::optional<T> value;
  std::string not_applicable;
};

template <typename Fn>
auto evaluate(Fn&& fn) -> Evaluated<decltype(fn())> {
  try {
    return {fn(), {}};
  } catch (const NotApplicable& e) {
    return {std::nullopt, e.precondition()};
  }
}

struct BoundReport {
  ParamTriple params;
  std::size_t n = 0;
  Rational lower_exponent;
  Evaluated<double> graph_upper;
  Evaluated<double> hypergraph_upper;
  Evaluated<Rational> hypergraph_upper_exponent;
  Evaluated<double> cbc_upper;
  Evaluated<Rational> cbc_upper_exponent;
  Evaluated<Rational> competing_exponent;
  Evaluated<std::uint64_t> diff_upper;
};

inline BoundReport bound_report(std::size_t n, const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  BoundReport rep;
  rep.params = p;
  rep.n = n;
  rep.lower_exponent = lower_exponent(p);
  rep.graph_upper = evaluate([&] {
    detail::require(p.r == 2, "r == 2");
    return graph_upper(n, p.k, p.q);
  });
  rep.hypergraph_upper = evaluate([&] { return hypergraph_upper(n, p); });
  rep.hypergraph_upper_exponent = evaluate([&] { return hypergraph_upper_exponent(p); });
  rep.cbc_upper = evaluate([&] { return cbc_upper(n, p.r, p.k); });
  rep.cbc_upper_exponent = evaluate([&] { return cbc_upper_exponent(p.r, p.k); });
  rep.competing_exponent = evaluate([&] { return competing_exponent_bb(p.r); });
  rep.diff_upper = evaluate([&] { return diff_upper_general(n, p.r, p.k, p.q); });
  return rep;
}

}  // namespace turan
