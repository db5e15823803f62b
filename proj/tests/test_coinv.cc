#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "d2p/coinv.hpp"
#include "d2p/rng.hpp"

using namespace d2p;

TEST_CASE("coinvariant stats for the plane rep") {
  const DihedralRep rep(3, 1, 0);
  const CoinvariantStats lex = coinvariant_stats(rep, lex_order());
  CHECK(lex.dimension == 6);
  CHECK(lex.top_degree == 3);
  CHECK(lex.lt_generators.size() == 3);
  CHECK(lex.standard_monomials.size() == 6);

  // Dimension and top degree agree across orders; the monomial data differs.
  const CoinvariantStats grev = coinvariant_stats(rep, grevlex_order());
  CHECK(grev.dimension == 6);
  CHECK(grev.top_degree == 3);

  const CoinvariantStats swapped = coinvariant_stats(rep, swapped_lex_order(rep.layout()));
  CHECK(swapped.dimension == 6);
  CHECK(swapped.top_degree == 3);
  CHECK(swapped.lt_generators != lex.lt_generators);
}

TEST_CASE("coinvariant stats for the swap rep") {
  const DihedralRep rep(3, 0, 1);
  const CoinvariantStats st = coinvariant_stats(rep, lex_order());
  CHECK(st.dimension == 2);
  CHECK(st.top_degree == 1);
  CHECK(render_monomial(rep.layout(), st.standard_monomials.back()) == "w1");
}

TEST_CASE("coinvariant stats match the ideal route") {
  for (const DihedralRep& rep : {DihedralRep(3, 1, 1), DihedralRep(5, 1, 0, {2}),
                                 DihedralRep(3, 2, 0), DihedralRep(3, 0, 2)}) {
    for (const MonomialOrder& order : sample_orders(rep.layout(), 5, 17)) {
      CAPTURE(order.label);
      const CoinvariantStats via_basis = coinvariant_stats(rep, order);
      const CoinvariantStats via_ideal =
          coinvariant_stats_of_ideal(hilbert_ideal_generators(rep), rep.nvars(), order);
      CHECK(via_basis.dimension == via_ideal.dimension);
      CHECK(via_basis.top_degree == via_ideal.top_degree);
      CHECK(via_basis.lt_generators == via_ideal.lt_generators);
      CHECK(via_basis.standard_monomials == via_ideal.standard_monomials);
    }
  }
}

TEST_CASE("top degree closed form") {
  CHECK(top_degree_formula(DihedralRep(3, 1, 0)) == 3);       // s + max(r, p) = 0 + 3
  CHECK(top_degree_formula(DihedralRep(3, 2, 1)) == 4);       // 1 + max(2, 3)
  CHECK(top_degree_formula(DihedralRep(5, 1, 2)) == 7);       // 2 + max(1, 5)
  CHECK(top_degree_formula(DihedralRep(3, 4, 0)) == 4);       // 0 + max(4, 3)
  CHECK(top_degree_formula(DihedralRep(3, 0, 1)) == 1);       // r = 0: just s
  CHECK(top_degree_formula(DihedralRep(7, 0, 3)) == 3);
  CHECK_THROWS_AS(top_degree_formula(DihedralRep(9, 1, 0)), std::invalid_argument);
}

TEST_CASE("top degree closed form matches the computed value") {
  for (const DihedralRep& rep : {DihedralRep(3, 1, 0), DihedralRep(3, 1, 1),
                                 DihedralRep(3, 0, 2), DihedralRep(5, 1, 0, {3}),
                                 DihedralRep(5, 0, 1), DihedralRep(3, 2, 0)}) {
    const std::uint32_t p = rep.p(), r = rep.r(), s = rep.s();
    CAPTURE(p);
    CAPTURE(r);
    CAPTURE(s);
    CHECK(coinvariant_stats(rep, grevlex_order()).top_degree == top_degree_formula(rep));
  }
}

TEST_CASE("steinberg lower bound for faithful reps") {
  // A faithful action (r >= 1) forces dimension >= |G| = 2p, with equality
  // for the plane rep.
  for (const DihedralRep& rep : {DihedralRep(3, 1, 0), DihedralRep(5, 1, 0),
                                 DihedralRep(3, 1, 1), DihedralRep(3, 2, 0)}) {
    CHECK(coinvariant_stats(rep, grevlex_order()).dimension >= 2 * rep.p());
  }
  CHECK(coinvariant_stats(DihedralRep(3, 1, 0), grevlex_order()).dimension == 6);
  CHECK(coinvariant_stats(DihedralRep(5, 1, 0), grevlex_order()).dimension == 10);
  // Non-faithful reps can land below the group order.
  CHECK(coinvariant_stats(DihedralRep(3, 0, 1), grevlex_order()).dimension == 2);
}

TEST_CASE("hsop bounds") {
  const HsopBounds b23 = hsop_bounds({2, 3});
  CHECK(b23.top_degree_bound == 3);
  CHECK(b23.dimension_bound == 6);

  const HsopBounds b26 = hsop_bounds({2, 6});
  CHECK(b26.top_degree_bound == 6);
  CHECK(b26.dimension_bound == 12);

  CHECK(hsop_bounds({1}).top_degree_bound == 0);
  CHECK(hsop_bounds({1}).dimension_bound == 1);

  CHECK_THROWS_AS(hsop_bounds({}), std::invalid_argument);
  CHECK_THROWS_AS(hsop_bounds({2, 0}), std::invalid_argument);

  const HsopBounds uni = hsop_bounds_uniform(2, 6);
  CHECK(uni.top_degree_bound == 10);
  CHECK(uni.dimension_bound == 36);
}

TEST_CASE("hsop bounds contain the plane rep exactly at degrees (2, p)") {
  // x1*y1 and x1^p + y1^p form an hsop; the coinvariant data attains both
  // bounds.
  for (const std::uint32_t p : {3u, 5u, 7u}) {
    const DihedralRep rep(p, 1, 0);
    const CoinvariantStats st = coinvariant_stats(rep, grevlex_order());
    const HsopBounds b = hsop_bounds({2, p});
    CHECK(st.top_degree == b.top_degree_bound);
    CHECK(st.dimension == b.dimension_bound);
  }
}

TEST_CASE("hilbert series of a complete intersection") {
  CHECK(hilbert_series_product({2, 3}) == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(hilbert_series_product({2}) == std::vector<std::uint64_t>{1, 1});
  CHECK(hilbert_series_product({1, 5}) == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(hilbert_series_product({}), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_series_product({3, 0}), std::invalid_argument);

  // Degree and total value identities on random degree lists.
  SplitMix64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> degrees;
    const std::size_t n = 1 + rng.below(5);
    std::uint64_t sum = 0;
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(7));
      degrees.push_back(d);
      sum += d - 1;
      prod *= d;
    }
    const auto series = hilbert_series_product(degrees);
    CHECK(series.size() == sum + 1);  // top degree = sum (d_i - 1)
    CHECK(series.front() == 1);
    CHECK(series.back() == 1);
    CHECK(std::accumulate(series.begin(), series.end(), std::uint64_t{0}) == prod);
    // Palindromic: complete intersections are Gorenstein.
    for (std::size_t i = 0; i < series.size(); ++i) {
      CHECK(series[i] == series[series.size() - 1 - i]);
    }
  }
}

TEST_CASE("plane rep coinvariant series matches the hsop series") {
  // Degrees (2, p) give series 1, 2, 2, ..., 2, 1 of length p + 1; counting
  // standard monomials by degree reproduces it for any order.
  for (const std::uint32_t p : {3u, 5u}) {
    const DihedralRep rep(p, 1, 0);
    const auto series = hilbert_series_product({2, p});
    for (const MonomialOrder& order : sample_orders(rep.layout(), 6, 29)) {
      CAPTURE(order.label);
      const CoinvariantStats st = coinvariant_stats(rep, order);
      std::vector<std::uint64_t> counts(st.top_degree + 1, 0);
      for (const Monomial& m : st.standard_monomials) ++counts[m.degree()];
      CHECK(counts == series);
    }
  }
}
