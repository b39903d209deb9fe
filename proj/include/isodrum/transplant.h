#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isodrum/intmat.h"
#include "isodrum/perm.h"

namespace isodrum {

// The commutant {T : T M^(mu) = N^(mu) T for all mu} of the two generator
// triples, where M/N are the unsigned permutation matrices. Entrywise the
// condition says T is constant on the orbits of (i,j) -> (nu(i), mu(j)),
// so the commutant has one basis indicator matrix per orbit.
struct Commutant {
  int d = 0;
  int dim = 0;
  std::vector<int> orbit_of;  // d*d entries, orbit id of (row, col)

  int orbit(int row, int col) const { return orbit_of[row * d + col]; }
};

// gens_m act on the tiles T maps from (columns), gens_n on the tiles T maps
// to (rows).
Commutant commutant(const std::array<Perm, 3>& gens_m, const std::array<Perm, 3>& gens_n);

// Smallest invertible 0/1 commutant element, preferring constant row and
// column sums; nullopt when no invertible 0/1 element exists or the
// commutant dimension exceeds max_dim.
std::optional<IntMat> solve_transplantation(const std::array<Perm, 3>& gens_m,
                                            const std::array<Perm, 3>& gens_n,
                                            int max_dim = 8);

// Signed commutant {T : T D^(mu) = E^(mu) T} with D/E the signed
// permutation matrices (-1 on the fixed-point diagonal). Orbits of the
// unsigned action carry a relative sign; orbits whose sign propagation is
// inconsistent admit only the zero value.
struct SignedCommutant {
  int d = 0;
  int dim = 0;                // consistent orbits only
  std::vector<int> orbit_of;  // d*d, id of consistent orbit or -1
  std::vector<int> sign_of;   // d*d, relative sign within its orbit

  int orbit(int row, int col) const { return orbit_of[row * d + col]; }
};

SignedCommutant signed_commutant(const std::array<Perm, 3>& gens_m,
                                 const std::array<Perm, 3>& gens_n);

// Invertible element of the signed commutant with entries in {-1,0,1},
// preferring constant row sums, then fewest nonzeros.
std::optional<IntMat> solve_signed_transplantation(const std::array<Perm, 3>& gens_m,
                                                   const std::array<Perm, 3>& gens_n,
                                                   int max_dim = 8);

// Outcome of the 0/1 commutant search. A permutation solution is a
// color-preserving relabeling, so the two members unfold to the same shape:
// such pairs are congruent whatever else the commutant holds. found means an
// invertible non-permutation solution exists and no permutation does.
enum class TransplantStatus { found, congruent, not_transplantable };

struct TransplantReport {
  TransplantStatus status = TransplantStatus::not_transplantable;
  std::optional<IntMat> t;  // a permutation when congruent, else best solution
  int commutant_dim = 0;
};

// Throws length_error when the commutant dimension exceeds max_dim.
TransplantReport classify_transplantation(const std::array<Perm, 3>& gens_m,
                                          const std::array<Perm, 3>& gens_n,
                                          int max_dim = 8);

// Product M^(w_k) ... M^(w_1) of unsigned permutation matrices along a word.
IntMat word_matrix(const std::array<Perm, 3>& gens, const std::vector<int>& word);

// Residual max |T M^(mu) - N^(mu) T| over all colors; 0 means T commutes.
int64_t commutation_residual(const IntMat& t, const std::array<Perm, 3>& gens_m,
                             const std::array<Perm, 3>& gens_n, bool signed_matrices);

}  // namespace isodrum
