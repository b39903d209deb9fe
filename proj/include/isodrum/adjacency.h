#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isodrum/intmat.h"
#include "isodrum/perm.h"

namespace isodrum {

// Permutation matrix of sigma: ones at (i, sigma(i)), so fixed points put
// ones on the diagonal. For a gluing involution the diagonal entries mark
// the tiles whose side of this color lies on the billiard boundary.
IntMat perm_matrix(const Perm& sigma);

// Permutation matrix with the fixed-point diagonal negated; encodes the
// sign flip of a Dirichlet eigenfunction continued across the boundary.
IntMat signed_perm_matrix(const Perm& sigma);

// Involution graph of one billiard member: vertices are tiles, one edge of
// color mu per transposition of generator mu.
struct ColoredGraph {
  int d = 0;
  std::array<Perm, 3> gens;

  struct Edge {
    int a, b, color;
  };
  std::vector<Edge> edges;

  bool connected = false;
  int cycle_rank = 0;  // edges - vertices + components

  IntMat adjacency() const;  // multigraph adjacency: entry counts gluings, zero diagonal

  // Sum of the three gluing matrices: adjacency plus a diagonal counting the
  // boundary sides of each tile (the loops the plain adjacency strips).
  IntMat gluing_sum() const;
};

ColoredGraph involution_graph(const std::array<Perm, 3>& gens);

// Tr(A^l) for l = 1..d, exact.
std::vector<int64_t> trace_table(const IntMat& a);

// True iff the adjacency spectra coincide, decided by equality of
// Tr(A^l) for l = 1..d in exact integer arithmetic. Beware: this can be
// false for a transplantable pair (the transplantation intertwines the
// gluing matrices with their diagonals, not the stripped adjacencies);
// the catalog's 13_8, 15_3 and 21_1 are counterexamples.
bool graph_isospectral(const ColoredGraph& g1, const ColoredGraph& g2);

// True iff the gluing-sum spectra coincide (same trace test). This is the
// condition transplantability actually forces: T (Sigma M) = (Sigma N) T.
bool gluing_isospectral(const ColoredGraph& g1, const ColoredGraph& g2);

// Vertex bijection g with g(sigma_mu(i)) = tau_mu(g(i)) for all mu, i.
// Requires connected graphs; nullopt if none exists.
std::optional<Perm> conjugating_map(const std::array<Perm, 3>& sigma,
                                    const std::array<Perm, 3>& tau);

// Color-preserving isomorphism modulo a global permutation of the three
// colors, applied identically to both members of each pair.
bool pairs_equivalent(const std::array<Perm, 3>& a1, const std::array<Perm, 3>& a2,
                      const std::array<Perm, 3>& b1, const std::array<Perm, 3>& b2);

}  // namespace isodrum
