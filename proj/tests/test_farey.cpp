#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sparseyao/farey.hpp"
#include "sparseyao/geometry.hpp"
#include "test_util.hpp"

using namespace sparseyao;

namespace {

long long brute_totient(long long m) {
  long long c = 0;
  for (long long j = 1; j <= m; ++j)
    if (std::gcd(j, m) == 1) ++c;
  return c;
}

std::vector<Fraction> brute_farey(int n) {
  std::vector<Fraction> v;
  for (long long q = 1; q <= n; ++q)
    for (long long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) v.push_back({p, q});
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<long long> brute_min_denominators(int k) {
  std::vector<long long> out;
  for (long long i = 1; i <= k; ++i) {
    for (long long q = 1;; ++q) {
      bool found = false;
      for (long long p = 0; p <= q && !found; ++p)
        if ((i - 1) * q <= p * k && p * k <= i * q) found = true;
      if (found) {
        out.push_back(q);
        break;
      }
    }
  }
  return out;
}

// rho is tent-shaped between consecutive Farey members, so the trapezoid rule
// over the members plus each gap midpoint integrates it without error.
double quadrature_on_kinks(const FareySet& f) {
  std::vector<double> nodes;
  for (size_t i = 0; i < f.items.size(); ++i) {
    nodes.push_back(static_cast<double>(f.items[i].p) / f.items[i].q);
    if (i + 1 < f.items.size()) {
      double a = static_cast<double>(f.items[i].p) / f.items[i].q;
      double b = static_cast<double>(f.items[i + 1].p) / f.items[i + 1].q;
      nodes.push_back((a + b) / 2.0);
    }
  }
  double total = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    total += (nodes[i + 1] - nodes[i]) *
             (rho(f, nodes[i]) + rho(f, nodes[i + 1])) / 2.0;
  return total;
}

}  // namespace

TEST_SUITE("farey") {
  TEST_CASE("totient examples and oracle") {
    CHECK(totient(1) == 1);
    CHECK(totient(13) == 12);
    CHECK(totient(10) == 4);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
    for (long long m = 1; m <= 200; ++m) CHECK(totient(m) == brute_totient(m));
  }

  TEST_CASE("make_fraction reduces and validates") {
    CHECK(make_fraction(2, 4) == Fraction{1, 2});
    CHECK(make_fraction(0, 7) == Fraction{0, 1});
    CHECK(make_fraction(5, 5) == Fraction{1, 1});
    CHECK_THROWS_AS(make_fraction(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_fraction(1, 0), std::invalid_argument);
  }

  TEST_CASE("farey_set examples") {
    auto f1 = farey_set(1);
    REQUIRE(f1.items.size() == 2);
    CHECK(f1.items[0] == Fraction{0, 1});
    CHECK(f1.items[1] == Fraction{1, 1});

    auto f3 = farey_set(3);
    std::vector<Fraction> want = {{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}};
    REQUIRE(f3.items.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(f3.items[i] == want[i]);

    CHECK(farey_set(5).items.size() == 11);
    CHECK_THROWS_AS(farey_set(0), std::invalid_argument);
  }

  TEST_CASE("farey_set matches enumeration oracle") {
    for (int n = 1; n <= 40; ++n) {
      auto got = farey_set(n).items;
      auto want = brute_farey(n);
      REQUIRE(got.size() == want.size());
      for (size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
    }
  }

  TEST_CASE("farey_set size equals 1 + totient sum") {
    long long sum = 0;
    for (int n = 1; n <= 1000; ++n) {
      sum += totient(n);
      CHECK(static_cast<long long>(farey_set(n).items.size()) == 1 + sum);
    }
  }

  TEST_CASE("consecutive members are unimodular and increasing") {
    for (int n : {2, 7, 30, 97}) {
      auto f = farey_set(n);
      for (size_t i = 0; i + 1 < f.items.size(); ++i) {
        CHECK(f.items[i] < f.items[i + 1]);
        CHECK(farey_adjacent_check(f.items[i], f.items[i + 1]));
      }
    }
  }

  TEST_CASE("farey_adjacent_check examples") {
    CHECK(farey_adjacent_check({1, 3}, {2, 5}));
    CHECK(farey_adjacent_check({0, 1}, {1, 1}));
    CHECK_FALSE(farey_adjacent_check({1, 4}, {3, 4}));
    CHECK_THROWS_AS(farey_adjacent_check({1, 2}, {1, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(farey_adjacent_check({1, 2}, {1, 2}),
                    std::invalid_argument);
  }

  TEST_CASE("farey sets are nested") {
    auto prev = farey_set(1);
    for (int n = 2; n <= 120; ++n) {
      auto cur = farey_set(n);
      CHECK(std::includes(cur.items.begin(), cur.items.end(),
                          prev.items.begin(), prev.items.end()));
      prev = std::move(cur);
    }
  }

  TEST_CASE("rho examples") {
    CHECK(rho(1, 0.5) == 0.5);
    CHECK(rho(3, 0.4) == doctest::Approx(0.4 - 1.0 / 3.0).epsilon(1e-15));
    for (auto fr : farey_set(7).items)
      CHECK(rho(7, static_cast<double>(fr.p) / fr.q) == 0.0);
    CHECK(rho(2, 0.0) == 0.0);
    CHECK(rho(2, 1.0) == 0.0);
    CHECK_THROWS_AS(rho(3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(rho(3, 1.1), std::invalid_argument);
  }

  TEST_CASE("rho matches linear scan and shrinks with n") {
    std::mt19937_64 rng(404);
    auto f9 = farey_set(9);
    for (int t = 0; t < 2000; ++t) {
      double x = testutil::uniform01(rng);
      double best = 2.0;
      for (auto fr : f9.items)
        best = std::min(best,
                        std::fabs(static_cast<double>(fr.p) / fr.q - x));
      CHECK(rho(f9, x) == doctest::Approx(best).epsilon(1e-15));
      CHECK(rho(10, x) <= rho(9, x));
      CHECK(rho(9, x) <= rho(8, x));
    }
  }

  TEST_CASE("integral examples") {
    CHECK(integral_rho_exact(1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(integral_rho_exact(2) == doctest::Approx(0.125).epsilon(1e-15));
  }

  TEST_CASE("integral matches quadrature") {
    for (int n = 1; n <= 50; ++n) {
      auto f = farey_set(n);
      CHECK(integral_rho_exact(f) ==
            doctest::Approx(quadrature_on_kinks(f)).epsilon(1e-12));
    }
    // Independent uniform-grid check, no knowledge of where the kinks are.
    int steps = 2000000;
    double h = 1.0 / steps;
    auto f5 = farey_set(5);
    double total = 0.0;
    for (int i = 0; i <= steps; ++i) {
      double w = (i == 0 || i == steps) ? 0.5 : 1.0;
      total += w * rho(f5, i * h);
    }
    total *= h;
    CHECK(integral_rho_exact(f5) == doctest::Approx(total).epsilon(1e-10));
  }

  TEST_CASE("min_interval_denominators examples and oracle") {
    CHECK(min_interval_denominators(1) == std::vector<long long>{1});
    CHECK(min_interval_denominators(2) == std::vector<long long>{1, 1});
    CHECK(min_interval_denominators(4) ==
          std::vector<long long>{1, 2, 2, 1});
    CHECK_THROWS_AS(min_interval_denominators(0), std::invalid_argument);
    for (int k = 1; k <= 60; ++k)
      CHECK(min_interval_denominators(k) == brute_min_denominators(k));
  }

  TEST_CASE("min_denominator_sums examples") {
    CHECK(min_denominator_sums(4) == std::pair<long long, long long>{6, 18});
    CHECK(min_denominator_sums(2) == std::pair<long long, long long>{2, 2});
    CHECK_THROWS_AS(min_denominator_sums(1), std::invalid_argument);
  }

  TEST_CASE("primitive lattice points match reduced fractions") {
    int n = 30;
    std::set<std::pair<long long, long long>> members;
    for (auto fr : farey_set(n).items) members.insert({fr.p, fr.q});
    for (long long b = 1; b <= n; ++b)
      for (long long a = 0; a <= b; ++a)
        CHECK(is_primitive(b, a) == (members.count({a, b}) > 0));
  }
}
