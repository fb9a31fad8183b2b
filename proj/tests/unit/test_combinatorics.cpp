#include "oracles.hpp"
#include "skewhowe/error.hpp"
#include "skewhowe/tableau.hpp"

#include <doctest.h>

#include <numeric>

using namespace skewhowe;

namespace {

Subset bits_to_subset(const std::string& s) {  // "110" -> {1,2}
  Subset out;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] == '1') out.insert(static_cast<int>(j) + 1);
  return out;
}

Tableau young() { return Tableau(Shape(3, 4), {{1, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 6, 7}}); }

}  // namespace

TEST_CASE("shape and tableau validation") {
  CHECK_THROWS_AS(Shape(1, 1), Error);
  CHECK_THROWS_AS(Shape(2, 0), Error);
  CHECK_THROWS_AS(Tableau(Shape(2, 1), {{1, 3}}), Error);
  CHECK_THROWS_AS(Tableau(Shape(2, 1), {{1, 2}, {1, 2}}), Error);
  CHECK_FALSE(Tableau(Shape(2, 2), {{1, 1}, {1, 2}}).is_column_strict());
  CHECK(Tableau(Shape(2, 2), {{2, 1}, {3, 4}}).is_column_strict());
  CHECK_FALSE(Tableau(Shape(2, 2), {{2, 1}, {3, 4}}).is_semistandard());
}

TEST_CASE("example Young tableau: type, nu and mu") {
  const Tableau t = young();
  CHECK(t.is_semistandard());
  CHECK(tableau_type(t) == GlWeight{2, 2, 1, 2, 1, 3, 1, 0, 0, 0, 0, 0});

  const std::vector<std::string> nu_bits = {"110", "101", "010", "101", "010", "111", "001"};
  const auto nu = tableau_to_nu(t);
  REQUIRE(nu.size() == 12);
  for (std::size_t i = 0; i < nu.size(); ++i)
    CHECK(nu[i] == (i < nu_bits.size() ? bits_to_subset(nu_bits[i]) : Subset()));

  const auto mu = tableau_to_mu(t);
  REQUIRE(mu.size() == 3);
  CHECK(mu[0] == bits_to_subset("110101000000"));
  CHECK(mu[1] == bits_to_subset("101011000000"));
  CHECK(mu[2] == bits_to_subset("010101100000"));

  CHECK(tableau_from_nu(t.shape(), nu) == t);
  CHECK(tableau_from_mu(t.shape(), mu) == t);
}

TEST_CASE("small bijection examples") {
  const Tableau t(Shape(2, 1), {{1, 2}});
  const auto nu = tableau_to_nu(t);
  CHECK(nu == std::vector<Subset>{Subset{1}, Subset{2}});
  const auto mu = tableau_to_mu(t);
  CHECK(mu == std::vector<Subset>{Subset{1}, Subset{2}});
  // nu that would need a repeated entry in a column
  CHECK_THROWS_AS(tableau_from_nu(Shape(2, 1), {Subset{1, 2}, Subset{1, 2}}), Error);
  CHECK_THROWS_AS(tableau_from_mu(Shape(2, 1), {Subset{1, 2}, Subset{}}), Error);
}

TEST_CASE("bijections round-trip on every column-strict tableau") {
  for (auto [N, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const Shape sh(N, l);
    for (const auto& t : enumerate_tableaux(sh)) {
      CHECK(tableau_from_nu(sh, tableau_to_nu(t)) == t);
      CHECK(tableau_from_mu(sh, tableau_to_mu(t)) == t);
      const auto nu = tableau_to_nu(t);
      const auto k = tableau_type(t);
      for (std::size_t i = 0; i < nu.size(); ++i) CHECK(nu[i].size() == k[i]);
    }
  }
}

TEST_CASE("enumeration matches brute force, in descending order") {
  for (auto [N, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const Shape sh(N, l);
    for (bool ss : {false, true}) {
      const auto brute = oracle::brute_tableaux(N, l, nullptr, ss);
      const auto got = enumerate_tableaux(sh, std::nullopt, ss);
      REQUIRE(got.size() == brute.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].rows() == brute[i]);
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] > got[i]);
    }
    for (const auto& k : level_weights(sh)) {
      const auto brute = oracle::brute_tableaux(N, l, &k, true);
      const auto got = enumerate_tableaux(sh, k, true);
      REQUIRE(got.size() == brute.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].rows() == brute[i]);
    }
  }
}

TEST_CASE("enumeration examples") {
  const Shape s21(2, 1);
  auto ss = enumerate_tableaux(s21, GlWeight{1, 1}, true);
  REQUIRE(ss.size() == 1);
  CHECK(ss[0].rows() == std::vector<std::vector<int>>{{1, 2}});
  auto all = enumerate_tableaux(s21, GlWeight{1, 1}, false);
  REQUIRE(all.size() == 2);
  CHECK(all[0].rows() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(all[1].rows() == std::vector<std::vector<int>>{{2, 1}});

  auto s22 = enumerate_tableaux(Shape(2, 2), GlWeight{1, 1, 1, 1}, true);
  REQUIRE(s22.size() == 2);
  // first columns (1,2) and (1,3): the smaller second entry is greater
  CHECK(s22[0].rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(s22[1].rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("highest tableau is the maximum") {
  CHECK(highest_tableau(Shape(2, 2)).rows() == std::vector<std::vector<int>>{{1, 1}, {2, 2}});
  const Tableau h = highest_tableau(Shape(3, 4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) CHECK(h.at(r, c) == r + 1);
  for (auto [N, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const auto all = enumerate_tableaux(Shape(N, l));
    CHECK(all.front() == highest_tableau(Shape(N, l)));
  }
  CHECK(compare(Tableau(Shape(2, 1), {{1, 2}}), Tableau(Shape(2, 1), {{2, 1}})) == std::strong_ordering::greater);
}

TEST_CASE("level weights") {
  const auto ws = level_weights(Shape(2, 2));
  for (const auto& k : ws) {
    CHECK(std::accumulate(k.begin(), k.end(), 0) == 4);
    for (int x : k) CHECK((x >= 0 && x <= 2));
  }
  // compositions of 4 into 4 parts at most 2: 19
  CHECK(ws.size() == 19);
}

TEST_CASE("peeling examples") {
  CHECK(peel_LT(Tableau(Shape(2, 1), {{1, 2}})) == PeelWord{{1, 1}});
  CHECK(peel_LT(Tableau(Shape(3, 1), {{1, 2, 3}})) == PeelWord{{1, 1}, {2, 1}, {1, 1}});
  CHECK(peel_LT(highest_tableau(Shape(3, 2))).empty());
  CHECK_THROWS_AS(peel_LT(Tableau(Shape(2, 1), {{2, 1}})), Error);
  // needs an index beyond l
  CHECK_NOTHROW(peel_LT(Tableau(Shape(2, 2), {{1, 1}, {2, 4}})));
}

TEST_CASE("peeling chains are semistandard, increasing and sum-consistent") {
  for (auto [N, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 1}}) {
    const Shape sh(N, l);
    for (const auto& t : enumerate_tableaux(sh, std::nullopt, true)) {
      std::vector<Tableau> chain;
      const PeelWord w = peel_LT(t, &chain);
      REQUIRE(!chain.empty());
      CHECK(chain.front() == t);
      CHECK(chain.back() == highest_tableau(sh));
      for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i].is_semistandard());
        if (i > 0) CHECK(chain[i] > chain[i - 1]);
      }
      int excess = 0;
      for (int r = 0; r < l; ++r)
        for (int c = 0; c < N; ++c) excess += t.at(r, c) - (r + 1);
      int total = 0;
      for (const auto& s : w) total += s.multiplicity;
      CHECK(total == excess);
    }
  }
}
