#include <pairstab/lattice.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace pairstab;

TEST_CASE("pair is the dot product") {
  CHECK(pair(OnePS{1, -1}, LatticePoint{2, 0}) == 2);
  CHECK(pair(OnePS{0, 0}, LatticePoint{7, -3}) == 0);
  CHECK(pair(OnePS{1, 2}, LatticePoint{3, -1}) == 1);
  CHECK_THROWS_AS(pair(OnePS{1, 2}, LatticePoint{3}), Error);
}

TEST_CASE("pair is bilinear") {
  oracle::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    auto a = oracle::random_point(rng, 3, -9, 9), b = oracle::random_point(rng, 3, -9, 9);
    auto uc = oracle::random_point(rng, 3, -9, 9);
    OnePS u(std::vector<Integer>(uc.coords().begin(), uc.coords().end()));
    CHECK(pair(u, a + b) == pair(u, a) + pair(u, b));
  }
}

TEST_CASE("clear_denominators") {
  CHECK(clear_denominators({{Rational(1, 2), Rational(1, 3)}}) == OnePS{3, 2});
  CHECK(clear_denominators({{Rational(1), Rational(0)}}) == OnePS{1, 0});
  CHECK(clear_denominators({{Rational(-2, 4), Rational(1, 4)}}) == OnePS{-2, 1});
  CHECK(clear_denominators({{Rational(6), Rational(-4)}}) == OnePS{3, -2});
  CHECK_THROWS_AS(clear_denominators({{Rational(0), Rational(0)}}), Error);
}

TEST_CASE("clear_denominators is parallel and primitive") {
  oracle::Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    RationalVector g;
    for (int i = 0; i < 3; ++i) {
      Rational q(oracle::uniform(rng, -12, 12), oracle::uniform(rng, 1, 9));
      q.canonicalize();
      g.push_back(q);
    }
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) continue;
    OnePS u = clear_denominators({g});
    Integer gcd = 0;
    for (const auto& c : u.coords()) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.get_mpz_t());
    CHECK(gcd == 1);
    // u = s g for one positive scalar s
    std::optional<Rational> s;
    for (int i = 0; i < 3; ++i) {
      if (g[i] == 0) {
        CHECK(u[i] == 0);
        continue;
      }
      Rational ratio = Rational(u[i]) / g[i];
      CHECK(ratio > 0);
      if (s) CHECK(*s == ratio);
      s = ratio;
    }
  }
}
