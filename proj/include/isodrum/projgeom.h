#pragma once

#include <array>
#include <string>
#include <vector>

#include "isodrum/gf.h"
#include "isodrum/intmat.h"
#include "isodrum/pairspec.h"
#include "isodrum/perm.h"
#include "isodrum/rational.h"

namespace isodrum {

// PG(n,q): points are homogeneous coordinate vectors of length n+1 over
// GF(q), normalized so the first nonzero coordinate is 1, listed in
// lexicographic order of the table encoding. Hyperplanes use the same
// coefficient-vector list; hyperplane h contains point p iff <h,p> = 0.
struct ProjectiveSpace {
  int n = 0, q = 0;
  GF field;
  std::vector<std::vector<int>> points;

  int num_points() const { return static_cast<int>(points.size()); }
  int points_per_hyperplane() const;  // k = (q^n - 1)/(q - 1)
  int hyperplane_meet() const;        // lambda = (q^(n-1) - 1)/(q - 1)
  int point_index(const std::vector<int>& v) const;
  bool incident(int hyper, int point) const;
};

ProjectiveSpace build_pg(int n, int q);

// t(h, p) = 1 iff point p lies on hyperplane h. Satisfies
// t t^T = lambda J + (k - lambda) I with constant row and column sums k.
struct IncidenceMatrix {
  IntMat t;
  int k = 0, lambda = 0;
};

IncidenceMatrix incidence_matrix(const ProjectiveSpace& space);

// Exact inverse (1/q^(n-1)) (t^T - (lambda/k) J).
RatMat incidence_inverse(const ProjectiveSpace& space);

// A collineation x -> A x^phi with phi the frob_exp-th Frobenius power;
// on_hyperplanes is the contragradient action h -> A^(-T) h^phi.
struct Collineation {
  std::vector<int> mat;  // (n+1) x (n+1), row-major field elements
  int frob_exp = 0;
  Perm on_points, on_hyperplanes;
  int fixed_count = 0;
  std::string type;  // "elation", "homology", "baer", or "linear"
};

// All involutions of the full collineation group (PGL, extended by the
// order-2 field automorphism when q is a square), sorted by fixed-point
// count then point-permutation image. Fixed-point and fixed-hyperplane
// counts of a collineation coincide.
std::vector<Collineation> enumerate_involutions(const ProjectiveSpace& space);

// One triple of involutions passing the edge-count equation, with the
// point-action and hyperplane-action colored graphs both connected of the
// same cycle rank, genuinely non-congruent, deduped modulo global color
// permutation and member swap.
struct SearchResult {
  std::array<int, 3> involution_ids{};
  std::array<Perm, 3> gens_points, gens_hyper;
  int cycle_rank = 0;
};

std::vector<SearchResult> search_isospectral_data(const ProjectiveSpace& space,
                                                  int allow_cycle_rank = 0);

// Search results as catalog records (names <d>_s1, <d>_s2, ...).
std::vector<PairSpec> search_results_as_pairs(const ProjectiveSpace& space,
                                              const std::vector<SearchResult>& results);

// Integer solutions of the tile-count constraints for unfolding an r-gon
// over PG(2,q), by involution class of the plane's collineation group.
struct ConstraintSolution {
  std::string case_name;  // "even-tree", "odd-tree", "square-tree", "square-cycle"
  int r = 0, q = 0;
};

std::vector<ConstraintSolution> constraint_table(int max_r = 12, int max_q = 64);

}  // namespace isodrum
