#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"

using namespace turan;
using fixtures::graph;

TEST(ValidateParams, AcceptsInteriorAndBoundary) {
  EXPECT_EQ(validate_params(2, 6, 0), (ParamTriple{2, 6, 0}));
  EXPECT_EQ(validate_params(3, 3, -2), (ParamTriple{3, 3, -2}));
}

TEST(ValidateParams, RejectsWithKinds) {
  try {
    validate_params(2, 5, -2);
    FAIL() << "q = -r accepted";
  } catch (const ParamError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QTooSmall);
    EXPECT_TRUE(e.ex_is_zero());
  }
  try {
    validate_params(2, 2, 0);
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KTooSmall);
  }
  try {
    validate_params(1, 5, 0);
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UniformityTooSmall);
  }
}

TEST(Cover, UnionOfSelectedEdges) {
  const auto t = fixtures::triangle();
  EXPECT_EQ(cover(t, {0, 1}), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(cover(t, {}).empty());
  const Hypergraph multi(2, 2, {{0, 1}, {0, 1}}, Flavor::Multi);
  EXPECT_EQ(cover(multi, {0, 1}), (std::vector<Vertex>{0, 1}));
}

TEST(Cover, RejectsBadIndex) {
  EXPECT_THROW(cover(fixtures::triangle(), {5}), Error);
}

TEST(Deficiency, SmallCounts) {
  const Hypergraph one(5, 3, {{0, 2, 4}});
  EXPECT_EQ(deficiency(one, {0}), 1 - 3);
  EXPECT_EQ(deficiency(fixtures::k4(), EdgeSelection::all(6)), 2);
  EXPECT_EQ(deficiency(fixtures::triangle(), EdgeSelection::all(3)), 0);
}

TEST(Components, SplitsOnSharedVertices) {
  EXPECT_EQ(components(graph(4, {{0, 1}, {2, 3}}), {0, 1}).size(), 2u);
  EXPECT_EQ(components(fixtures::path(3), {0, 1}).size(), 1u);
  const auto g = graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto parts = components(g, EdgeSelection::all(4));
  ASSERT_EQ(parts.size(), 2u);
  std::vector<std::size_t> sizes{parts[0].size(), parts[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3}));
}

TEST(Components, DeficiencyIsAdditive) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(8);
    const int r = 2 + static_cast<int>(rng.below(2));
    const auto h = fixtures::random_multi(n, r, 1 + rng.below(10), rng);
    std::vector<EdgeIndex> pick;
    for (EdgeIndex i = 0; i < h.m(); ++i)
      if (rng.bernoulli(0.5)) pick.push_back(i);
    if (pick.empty()) continue;
    const EdgeSelection s(pick);
    long sum = 0;
    std::size_t total = 0;
    for (const auto& part : components(h, s)) {
      sum += deficiency(h, part);
      total += part.size();
    }
    EXPECT_EQ(total, s.size());
    EXPECT_EQ(sum, deficiency(h, s));
  }
}

TEST(Cover, MonotoneUnderAddingEdges) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = fixtures::random_multi(8, 3, 8, rng);
    std::vector<EdgeIndex> grow;
    long prev_def = 0;
    std::size_t prev_cover = 0;
    for (EdgeIndex i = 0; i < h.m(); ++i) {
      grow.push_back(i);
      const EdgeSelection s(grow);
      const std::size_t c = cover(h, s).size();
      const long d = deficiency(h, s);
      EXPECT_GE(c, prev_cover);
      const long x = static_cast<long>(c - prev_cover);
      EXPECT_LE(x, 3);
      if (grow.size() > 1) EXPECT_EQ(d, prev_def + 1 - x);
      prev_def = d;
      prev_cover = c;
    }
  }
}

TEST(Serialization, ReadsTriangle) {
  const auto h = read_hypergraph("3 2 3 simple\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(h, fixtures::triangle());
}

TEST(Serialization, WriterNormalizes) {
  const auto h = read_hypergraph("# comment\n4 2 3 multi\n3 2\n1 0\n0 1\n");
  EXPECT_EQ(write_hypergraph(h), "4 2 3 multi\n0 1\n0 1\n2 3\n");
}

TEST(Serialization, RoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = fixtures::random_multi(2 + rng.below(9), 2, rng.below(12), rng);
    EXPECT_EQ(read_hypergraph(write_hypergraph(h)), h);
  }
}

TEST(Serialization, ErrorKinds) {
  auto kind_of = [](const char* text) {
    try {
      read_hypergraph(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  // A short edge line is a parse error tagged with the uniformity mismatch.
  EXPECT_THROW(read_hypergraph("3 3 1 simple\n0 1\n"), ParseError);
  EXPECT_EQ(kind_of("3 3 1 simple\n0 1\n"), ErrorKind::UniformityMismatch);
  EXPECT_EQ(kind_of("3 2 1 simple\n0 3\n"), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of("3 2 2 simple\n0 1\n1 0\n"), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of("3 2 2 simple\n0 1\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3 2 x simple\n"), ErrorKind::ParseError);
}

TEST(Serialization, ParseErrorCarriesLine) {
  try {
    read_hypergraph("3 2 2 simple\n0 1\n0 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(RandomUniform, Extremes) {
  EXPECT_EQ(random_uniform(7, 3, 0.0, 1).m(), 0u);
  EXPECT_EQ(random_uniform(7, 3, 1.0, 1), complete_hypergraph(7, 3));
  EXPECT_EQ(random_uniform(9, 2, 0.3, 42), random_uniform(9, 2, 0.3, 42));
  EXPECT_THROW(random_uniform(5, 2, 1.5, 0), Error);
}

TEST(RandomUniform, HalfDensityWithinFiveSigma) {
  const std::size_t n = 10;
  const double total = static_cast<double>(binomial(n, 2));
  const double sigma = std::sqrt(total * 0.25);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const double m = static_cast<double>(random_uniform(n, 2, 0.5, seed).m());
    EXPECT_LE(std::abs(m - total / 2), 5 * sigma) << "seed " << seed;
  }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 2), 15u);
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(binomial(7, 0), 1u);
  EXPECT_EQ(binomial(-1, 2), 0u);
}
