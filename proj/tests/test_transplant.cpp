#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isodrum/adjacency.h"
#include "isodrum/lengths.h"
#include "isodrum/pairspec.h"
#include "isodrum/transplant.h"

using namespace isodrum;

TEST_CASE("commutant of a pair with itself contains the identity orbit") {
  const PairSpec& p = catalog_pair("7_1");
  Commutant c = commutant(p.gens_points(), p.gens_points());
  // Same-member commutant: the diagonal is one orbit (the group acts
  // transitively), so the identity is a basis element.
  int diag_orbit = c.orbit(0, 0);
  for (int i = 1; i < 7; ++i) CHECK(c.orbit(i, i) == diag_orbit);
}

TEST_CASE("transplantation exists for every non-flagged pair") {
  for (const auto& p : catalog()) {
    if (p.corrupt) continue;
    CAPTURE(p.name);
    auto t = solve_transplantation(p.gens_points(), p.gens_hyper());
    REQUIRE(t.has_value());
    CHECK(t->det() != 0);
    CHECK(commutation_residual(*t, p.gens_points(), p.gens_hyper(), false) == 0);
  }
}

TEST_CASE("transplantation matrix for degree 7 squares to J + 2I") {
  for (const char* name : {"7_1", "7_2", "7_3"}) {
    const PairSpec& p = catalog_pair(name);
    auto t = solve_transplantation(p.gens_points(), p.gens_hyper());
    REQUIRE(t.has_value());
    // Point-hyperplane incidence of the smallest projective plane: row and
    // column sums 3, T T^t = J + 2I.
    IntMat tt = *t * t->transpose();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) CHECK(tt(i, j) == (i == j ? 3 : 1));
    IntMat t2 = *t * *t;
    bool symmetric = (*t == t->transpose());
    if (symmetric)
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(t2(i, j) == 1 + 2 * (i == j));
  }
}

TEST_CASE("commuted words satisfy the Green-function identity") {
  // sum_{i'j'} T_{ii'} T_{jj'} M_{i'j'} = 1 + 2 N_{ij} for degree-7 pairs,
  // for every word in the gluing matrices.
  for (const char* name : {"7_1", "7_2", "7_3"}) {
    const PairSpec& p = catalog_pair(name);
    auto t = solve_transplantation(p.gens_points(), p.gens_hyper());
    REQUIRE(t.has_value());
    // The identity needs T T^t = J + 2I and T M = N T; verified above.
    std::vector<std::vector<int>> words = {{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int c = 0; c < 3; ++c) {
            auto w2 = w;
            w2.push_back(c);
            next.push_back(w2);
          }
      for (const auto& w : next) {
        IntMat m = word_matrix(p.gens_points(), w);
        IntMat n = word_matrix(p.gens_hyper(), w);
        IntMat lhs = *t * m * t->transpose();
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j) CHECK(lhs(i, j) == 1 + 2 * n(i, j));
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("signed transplantation exists for the degree 7 pairs") {
  for (const char* name : {"7_1", "7_2", "7_3"}) {
    const PairSpec& p = catalog_pair(name);
    auto t = solve_signed_transplantation(p.gens_points(), p.gens_hyper());
    REQUIRE(t.has_value());
    CHECK(t->det() != 0);
    CHECK(commutation_residual(*t, p.gens_points(), p.gens_hyper(), true) == 0);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) CHECK(std::abs((*t)(i, j)) <= 1);
  }
}

TEST_CASE("word matrices compose permutation matrices right to left") {
  const PairSpec& p = catalog_pair("7_1");
  IntMat m01 = word_matrix(p.gens_points(), {0, 1});
  IntMat m0 = perm_matrix(p.gens_points()[0]);
  IntMat m1 = perm_matrix(p.gens_points()[1]);
  CHECK(m01 == m1 * m0);
  CHECK(word_matrix(p.gens_points(), {}) == IntMat::identity(7));
}

TEST_CASE("isolength spectra match for all non-flagged pairs") {
  for (const auto& p : catalog()) {
    if (p.corrupt) continue;
    CAPTURE(p.name);
    auto rep = isolength_check(p.gens_points(), p.gens_hyper(), 6);
    CHECK(rep.equal);
    CHECK_FALSE(rep.witness.has_value());
    CHECK(rep.words_checked == 3 + 9 + 27 + 81 + 243 + 729);
  }
}

TEST_CASE("perturbing one gluing breaks the length spectrum quickly") {
  const PairSpec& p = catalog_pair("7_1");
  auto gens = p.gens_hyper();
  // Reroute one transposition of the first color: (0 4)(2 3) -> (0 4)(2 6).
  gens[0] = Perm::parse_cycles("(0 4)(2 6)", 7);
  auto rep = isolength_check(p.gens_points(), gens, 8);
  CHECK_FALSE(rep.equal);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->size() <= 4);
  CHECK(rep.count_first != rep.count_second);
}

TEST_CASE("identical members give equal length spectra trivially") {
  const PairSpec& p = catalog_pair("13_1");
  auto rep = isolength_check(p.gens_points(), p.gens_points(), 4);
  CHECK(rep.equal);
}
