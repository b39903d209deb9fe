#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "isodrum/adjacency.h"
#include "isodrum/pairspec.h"
#include "isodrum/projgeom.h"
#include "isodrum/transplant.h"

using namespace isodrum;

TEST_CASE("finite field tables") {
  GF f2(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);

  GF f3(3);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.neg(1) == 2);

  // GF(4) with x^2 = x + 1: elements 0, 1, x=2, x+1=3.
  GF f4(4);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);
  CHECK(f4.mul(3, 3) == 2);
  CHECK(f4.add(2, 3) == 1);
  CHECK(f4.frob(2) == 3);   // x -> x^2 = x + 1
  CHECK(f4.frob(3) == 2);
  CHECK(f4.frob(1) == 1);
  CHECK(f4.has_order2_automorphism());
  CHECK_FALSE(GF(3).has_order2_automorphism());

  GF f9(9);
  for (int a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  CHECK(f9.frob(f9.frob(2)) == 2);

  CHECK_THROWS_AS(GF(6), std::invalid_argument);
  CHECK(is_prime_power(8));
  CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("projective space counts") {
  ProjectiveSpace fano = build_pg(2, 2);
  CHECK(fano.num_points() == 7);
  CHECK(fano.points_per_hyperplane() == 3);
  CHECK(fano.hyperplane_meet() == 1);

  ProjectiveSpace line = build_pg(1, 2);
  CHECK(line.num_points() == 3);

  ProjectiveSpace pg32 = build_pg(3, 2);
  CHECK(pg32.num_points() == 15);
  CHECK(pg32.points_per_hyperplane() == 7);

  ProjectiveSpace pg23 = build_pg(2, 3);
  CHECK(pg23.num_points() == 13);
  ProjectiveSpace pg24 = build_pg(2, 4);
  CHECK(pg24.num_points() == 21);
  CHECK(pg24.points_per_hyperplane() == 5);

  // Each hyperplane contains exactly k points.
  for (int h = 0; h < pg23.num_points(); ++h) {
    int cnt = 0;
    for (int p = 0; p < pg23.num_points(); ++p) cnt += pg23.incident(h, p);
    CHECK(cnt == 4);
  }
}

TEST_CASE("incidence matrix identities") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    ProjectiveSpace space = build_pg(n, q);
    IncidenceMatrix inc = incidence_matrix(space);
    int npts = space.num_points();
    IntMat tt = inc.t * inc.t.transpose();
    for (int i = 0; i < npts; ++i)
      for (int j = 0; j < npts; ++j)
        CHECK(tt(i, j) == inc.lambda + (i == j ? inc.k - inc.lambda : 0));
    for (int i = 0; i < npts; ++i) {
      int64_t rs = 0, cs = 0;
      for (int j = 0; j < npts; ++j) {
        rs += inc.t(i, j);
        cs += inc.t(j, i);
      }
      CHECK(rs == inc.k);
      CHECK(cs == inc.k);
    }

    RatMat tinv = incidence_inverse(space);
    RatMat t(npts, npts);
    for (int i = 0; i < npts; ++i)
      for (int j = 0; j < npts; ++j) t(i, j) = Rat(inc.t(i, j));
    CHECK((t * tinv) == RatMat::identity(npts));
  }
}

TEST_CASE("involution enumeration") {
  ProjectiveSpace fano = build_pg(2, 2);
  auto inv2 = enumerate_involutions(fano);
  CHECK(inv2.size() == 21);
  for (const auto& c : inv2) {
    CHECK(c.type == "elation");
    CHECK(c.fixed_count == 3);
    CHECK(c.on_points.is_involution());
    CHECK(c.on_hyperplanes.is_involution());
    CHECK(c.on_hyperplanes.num_fixed() == 3);
  }

  ProjectiveSpace pg23 = build_pg(2, 3);
  auto inv3 = enumerate_involutions(pg23);
  for (const auto& c : inv3) {
    CHECK(c.type == "homology");
    CHECK(c.fixed_count == 5);
    CHECK(c.on_hyperplanes.num_fixed() == 5);
  }

  // PGL(4,2) = GL(4,2) = A8: 105 transvections (I + rank-1 nilpotent, 7
  // fixed points) and 210 rank-2 unipotents (3 fixed points). Cross-check
  // against A8 cycle types: 105 of shape 2^4 and 210 of shape 2^2 1^4.
  ProjectiveSpace pg32 = build_pg(3, 2);
  auto inv4 = enumerate_involutions(pg32);
  CHECK(inv4.size() == 315);
  int elations = 0, linears = 0;
  for (const auto& c : inv4) {
    if (c.type == "elation") {
      ++elations;
      CHECK(c.fixed_count == 7);
    } else {
      CHECK(c.type == "linear");
      CHECK(c.fixed_count == 3);
      ++linears;
    }
  }
  CHECK(elations == 105);
  CHECK(linears == 210);

  ProjectiveSpace pg24 = build_pg(2, 4);
  auto inv24 = enumerate_involutions(pg24);
  int baer = 0, elation24 = 0;
  for (const auto& c : inv24) {
    if (c.type == "baer") {
      ++baer;
      CHECK(c.fixed_count == 7);  // a PG(2,2) subplane
    } else {
      CHECK(c.type == "elation");
      CHECK(c.fixed_count == 5);
      ++elation24;
    }
  }
  CHECK(baer > 0);
  CHECK(elation24 > 0);
  CHECK(inv24.size() == size_t(baer + elation24));
}

TEST_CASE("duality intertwines point and hyperplane actions") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    ProjectiveSpace space = build_pg(n, q);
    IncidenceMatrix inc = incidence_matrix(space);
    auto invs = enumerate_involutions(space);
    size_t step = invs.size() > 40 ? invs.size() / 17 : 1;
    for (size_t i = 0; i < invs.size(); i += step) {
      IntMat pm = perm_matrix(invs[i].on_points);
      IntMat hm = perm_matrix(invs[i].on_hyperplanes);
      CHECK((inc.t * pm) == (hm * inc.t));
    }
  }
}

// Tallies which healthy catalog pairs of degree d are hit by search results;
// returns the matched names and checks no result matches two pairs.
static std::set<std::string> match_catalog(const std::vector<SearchResult>& results, int degree) {
  std::set<std::string> matched;
  for (const auto& r : results) {
    int hits = 0;
    for (const PairSpec& p : catalog()) {
      if (p.corrupt || p.gens_points()[0].degree() != degree) continue;
      if (pairs_equivalent(r.gens_points, r.gens_hyper, p.gens_points(), p.gens_hyper())) {
        matched.insert(p.name);
        ++hits;
      }
    }
    CHECK(hits <= 1);
  }
  return matched;
}

TEST_CASE("search reproduces the known pair counts") {
  ProjectiveSpace fano = build_pg(2, 2);
  auto r22 = search_isospectral_data(fano, 0);
  CHECK(r22.size() == 3);

  // Nine 13-tile pairs; the six whose catalog transcription is healthy each
  // match a distinct search result.
  ProjectiveSpace pg23 = build_pg(2, 3);
  auto r23 = search_isospectral_data(pg23, 0);
  CHECK(r23.size() == 9);
  CHECK(match_catalog(r23, 13).size() == 6);

  ProjectiveSpace pg32 = build_pg(3, 2);
  auto r32 = search_isospectral_data(pg32, 0);
  CHECK(r32.size() == 4);
  CHECK(match_catalog(r32, 15) == std::set<std::string>{"15_1", "15_2", "15_3"});

  ProjectiveSpace pg24 = build_pg(2, 4);
  auto r24 = search_isospectral_data(pg24, 1);
  CHECK(r24.size() == 1);
  if (!r24.empty()) {
    CHECK(r24[0].cycle_rank == 1);
    const PairSpec& big = catalog_pair("21_1");
    CHECK(pairs_equivalent(r24[0].gens_points, r24[0].gens_hyper, big.gens_points(),
                           big.gens_hyper()));
  }
}

TEST_CASE("search results match the healthy catalog entries") {
  // The 7-tile search must recover the three catalog pairs, each exactly
  // once, modulo recoloring and member swap.
  ProjectiveSpace fano = build_pg(2, 2);
  auto found = search_isospectral_data(fano, 0);
  std::set<std::string> matched;
  for (const auto& r : found)
    for (const auto& name : {"7_1", "7_2", "7_3"}) {
      const PairSpec& p = catalog_pair(name);
      if (pairs_equivalent(r.gens_points, r.gens_hyper, p.gens_points(), p.gens_hyper()))
        matched.insert(name);
    }
  CHECK(matched.size() == 3);
}

TEST_CASE("search results are transplantable and flow through the catalog format") {
  ProjectiveSpace fano = build_pg(2, 2);
  auto found = search_isospectral_data(fano, 0);
  auto pairs = search_results_as_pairs(fano, found);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].name == "7_s1");
  CHECK(pairs[0].group_label == "PSL(3,2)");

  auto reparsed = parse_catalog(format_catalog(pairs));
  REQUIRE(reparsed.size() == 3);
  for (size_t i = 0; i < reparsed.size(); ++i) {
    CHECK_FALSE(reparsed[i].corrupt);
    CHECK(reparsed[i].gens == pairs[i].gens);
    auto rep = classify_transplantation(reparsed[i].gens_points(), reparsed[i].gens_hyper());
    CHECK(rep.status == TransplantStatus::found);
  }
}

TEST_CASE("transplantation classification") {
  const PairSpec& p = catalog_pair("7_3");
  auto rep = classify_transplantation(p.gens_points(), p.gens_hyper());
  CHECK(rep.status == TransplantStatus::found);
  REQUIRE(rep.t.has_value());
  CHECK(commutation_residual(*rep.t, p.gens_points(), p.gens_hyper(), false) == 0);
  // Row sums k = 3 and T T^T = J + 2I, the Fano incidence structure.
  IntMat tt = *rep.t * rep.t->transpose();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(tt(i, j) == 1 + (i == j ? 2 : 0));

  // A member against itself is congruent, and the witness is a permutation
  // even though the commutant also holds invertible non-permutations.
  auto self = classify_transplantation(p.gens_points(), p.gens_points());
  CHECK(self.status == TransplantStatus::congruent);
  REQUIRE(self.t.has_value());
  CHECK(self.t->size() == 7);
  for (int i = 0; i < 7; ++i) {
    int64_t row = 0;
    for (int j = 0; j < 7; ++j) row += (*self.t)(i, j);
    CHECK(row == 1);
  }

  // Degree-2 edge semantics: a shared relabeling is congruence, and equal
  // forced rows leave no invertible solution at all.
  std::array<Perm, 3> swap2 = {Perm::parse_cycles("(0 1)", 2), Perm::identity(2),
                               Perm::identity(2)};
  std::array<Perm, 3> id2 = {Perm::identity(2), Perm::identity(2), Perm::identity(2)};
  CHECK(classify_transplantation(swap2, swap2).status == TransplantStatus::congruent);
  CHECK(classify_transplantation(id2, swap2).status == TransplantStatus::not_transplantable);

  // 21_1: commutant solution with row sum k = 5.
  const PairSpec& big = catalog_pair("21_1");
  auto rep21 = classify_transplantation(big.gens_points(), big.gens_hyper());
  CHECK(rep21.status == TransplantStatus::found);
  for (int i = 0; i < 21; ++i) {
    int64_t rs = 0;
    for (int j = 0; j < 21; ++j) rs += (*rep21.t)(i, j);
    CHECK(rs == 5);
  }
}

TEST_CASE("constraint table") {
  auto sols = constraint_table();
  std::multiset<std::string> cases;
  for (const auto& s : sols) cases.insert(s.case_name);
  CHECK(cases.count("even-tree") == 1);
  CHECK(cases.count("odd-tree") == 1);
  CHECK(cases.count("square-tree") == 0);
  CHECK(cases.count("square-cycle") == 1);
  for (const auto& s : sols) {
    CHECK(s.r == 3);
    if (s.case_name == "even-tree") CHECK(s.q == 2);
    if (s.case_name == "odd-tree") CHECK(s.q == 3);
    if (s.case_name == "square-cycle") CHECK(s.q == 4);
  }
}
