#include <gtest/gtest.h>

#include <cmath>

#include "turan/bounds.hpp"

using namespace turan;

namespace {

template <typename Fn>
std::string failed_precondition(Fn&& fn) {
  try {
    fn();
  } catch (const NotApplicable& e) {
    return e.precondition();
  }
  return "";
}

// Same bound through exp/log in long double.
long double graph_upper_logpath(long double n, int k, int q) {
  const int h = k / (q + 3);
  const long double logC = std::log(static_cast<long double>(q + 2)) / h;
  return std::exp(logC + (1.0L + 1.0L / h) * std::log(n)) + (q + 2) * n;
}

}  // namespace

TEST(LowerExponent, Values) {
  EXPECT_EQ(lower_exponent({2, 6, 0}), Rational(7, 5));
  EXPECT_EQ(lower_exponent({2, 5, 0}), Rational(3, 2));
  for (int r = 2; r <= 5; ++r)
    for (int q = -r + 1; q <= 3; ++q) EXPECT_EQ(lower_exponent({r, q + r + 1, q}), Rational(r));
}

TEST(GraphUpper, SixteenSixZero) {
  EXPECT_NEAR(graph_upper(16, 6, 0), std::sqrt(2.0) * 64 + 32, 1e-9);
  EXPECT_EQ(graph_upper_exponent(6, 0), Rational(3, 2));
  EXPECT_EQ(failed_precondition([] { return graph_upper(40, 5, 0); }), "k >= 2q+6");
  EXPECT_EQ(failed_precondition([] { return graph_upper(40, 7, 1); }), "k >= 2q+6");
  EXPECT_EQ(failed_precondition([] { return graph_upper(40, 8, -2); }), "q >= -1");
  EXPECT_EQ(failed_precondition([] { return graph_upper(5, 6, 0); }), "n >= k");
}

TEST(GraphUpper, AgreesWithLogPath) {
  for (int q = -1; q <= 3; ++q)
    for (int k = 2 * q + 6; k <= 2 * q + 20; ++k)
      for (std::size_t n : {static_cast<std::size_t>(k), std::size_t{100}, std::size_t{12345}}) {
        const long double ref = graph_upper_logpath(static_cast<long double>(n), k, q);
        EXPECT_LT(std::abs(graph_upper(n, k, q) - ref) / ref, 1e-9L);
      }
}

TEST(HypergraphUpper, Preconditions) {
  EXPECT_EQ(failed_precondition([] { return hypergraph_upper(50, {3, 7, 0}); }), "k >= 2q+2r+2");
  EXPECT_EQ(failed_precondition([] { return hypergraph_upper_exponent({3, 7, 0}); }), "k >= 2q+2r+2");
  EXPECT_EQ(hypergraph_upper_exponent({3, 8, 0}), Rational(5, 2));
  EXPECT_EQ(hypergraph_upper_exponent({3, 9, 0}), Rational(5, 2));
  EXPECT_EQ(hypergraph_upper_exponent({4, 20, 1}), Rational(3) + Rational(1, 3));
}

TEST(HypergraphUpper, GraphCaseMatchesGraphShape) {
  // r = 2: (2C/2) n^(1+1/h) + (2(q+2)/2) n is the graph bound.
  for (int q = -1; q <= 2; ++q)
    for (int k = 2 * q + 6; k <= 14; ++k)
      EXPECT_NEAR(hypergraph_upper(64, {2, k, q}) / graph_upper(64, k, q), 1.0, 1e-12);
}

TEST(CbcUpper, SpecializesHypergraphBound) {
  for (int r = 2; r <= 5; ++r)
    for (int k = 2 * r + 2; k <= 2 * r + 10; ++k)
      for (std::size_t n : {static_cast<std::size_t>(k), std::size_t{200}}) {
        const double a = cbc_upper(n, r, k);
        const double b = hypergraph_upper(n, {r, k, 0});
        EXPECT_LE(std::abs(a - b) / b, 1e-9);
        EXPECT_EQ(cbc_upper_exponent(r, k), hypergraph_upper_exponent({r, k, 0}));
      }
  EXPECT_EQ(cbc_upper_exponent(3, 8), Rational(5, 2));
}

TEST(CompetingExponent, Values) {
  EXPECT_EQ(competing_exponent_bb(3), Rational(11, 4));
  EXPECT_EQ(competing_exponent_bb(4), Rational(31, 8));
  EXPECT_EQ(failed_precondition([] { return competing_exponent_bb(2); }), "r >= 3");
  EXPECT_LT(cbc_upper_exponent(3, 8), competing_exponent_bb(3));
}

TEST(ZValue, Scan) {
  EXPECT_EQ(z_value(6, 0), 5);
  EXPECT_EQ(z_value(4, -1), 3);
  EXPECT_EQ(z_value(7, 1), 6);
  EXPECT_EQ(z_value(4, 0), std::nullopt);
}

TEST(DiffUpper, Values) {
  EXPECT_EQ(diff_upper_general(8, 3, 5, 0), 84u);
  for (std::size_t n = 6; n <= 20; ++n) EXPECT_EQ(diff_upper_general(n, 2, 6, 0), 5 * (n - 1));
  EXPECT_EQ(diff_upper_general(9, 2, 2, -1), 8u);
  EXPECT_EQ(diff_upper_general(9, 3, 2, -2), 28u);
  EXPECT_EQ(failed_precondition([] { return diff_upper_general(4, 2, 6, 0); }), "n >= k");
}

TEST(FUpper, GraphCaseMatchesGraphUpper) {
  for (int k = 6; k <= 16; ++k)
    for (int v = 2; v <= k; ++v) {
      const int q = k - v - 1;
      if (q < -1 || k < 2 * q + 6) continue;
      for (std::size_t n : {static_cast<std::size_t>(k), std::size_t{77}}) {
        const double a = f_upper_r2(n, v, k);
        const double b = graph_upper(n, k, q);
        EXPECT_LE(std::abs(a - b) / b, 1e-9) << "k=" << k << " v=" << v;
      }
    }
  EXPECT_EQ(failed_precondition([] { return f_upper_r2(10, 1, 6); }), "v >= 2");
}

TEST(FUpper, GeneralRangeAndValue) {
  // At k = 8, r = 3 the admissible v are 7..9; v = 6 (q = 1) is outside.
  EXPECT_EQ(failed_precondition([] { return f_upper_general(32, 3, 6, 8); }), "v >= (k+2r)/2");
  EXPECT_EQ(failed_precondition([] { return f_upper_general(32, 3, 10, 8); }), "v <= k+r-2");
  // q = 1 at r = 3 first fits at k = 10, v = 8.
  const auto f = f_upper_general(32, 3, 8, 10);
  const double head = hypergraph_upper(32, {3, 10, 1});
  EXPECT_NEAR(f.leading + 2.0 * 4 / 6 * 32 * 32, head, 1e-9 * head);
  EXPECT_NEAR(f.total(), head + 9.0 * 465, 1e-9 * head);
  // The v range is exactly k >= 2q+2r+2 under q = k-v-1.
  for (int r = 2; r <= 4; ++r)
    for (int k = 2; k <= 16; ++k)
      for (int v = 0; v <= k + r; ++v) {
        const int q = k - v - 1;
        const bool in_range = 2 * v >= k + 2 * r && v <= k + r - 2;
        const bool shape = k >= 2 * q + 2 * r + 2 && q >= -r + 1;
        EXPECT_EQ(in_range, shape) << r << ' ' << k << ' ' << v;
      }
}

TEST(DConstant, FloorAndGoldenTable) {
  // Exact H(6,0) graph Turan numbers for n = 1..8.
  const std::vector<std::uint64_t> ex{0, 0, 1, 3, 4, 5, 7, 9, 12};
  const auto d = d_constant_estimate(6, 0, 8, [&](std::size_t n) { return ex[n]; });
  EXPECT_EQ(d.z, 5);
  EXPECT_DOUBLE_EQ(d.value, 2.5);
  EXPECT_EQ(d.attained_at, 2u);
  // A large ex everywhere leaves the floor.
  const auto flat = d_constant_estimate(6, 0, 8, [](std::size_t n) { return 10 * n; });
  EXPECT_EQ(flat.value, 1.0);
  EXPECT_FALSE(flat.attained_at);
  double prev = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    const double v = d_constant_estimate(6, 0, m, [&](std::size_t n) { return ex[n]; }).value;
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(BoundReport, MarksInapplicableEntries) {
  const auto rep = bound_report(16, {2, 6, 0});
  EXPECT_EQ(rep.lower_exponent, Rational(7, 5));
  ASSERT_TRUE(rep.graph_upper.value);
  EXPECT_FALSE(rep.competing_exponent.value);
  EXPECT_EQ(rep.competing_exponent.not_applicable, "r >= 3");
  const auto rep3 = bound_report(16, {3, 6, 0});
  EXPECT_EQ(rep3.graph_upper.not_applicable, "r == 2");
  EXPECT_EQ(rep3.hypergraph_upper.not_applicable, "k >= 2q+2r+2");
}
