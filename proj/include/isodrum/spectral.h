#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "isodrum/griddomain.h"
#include "isodrum/intmat.h"

namespace isodrum {

struct Spectrum {
  std::vector<double> values;  // ascending, units 1/length^2
  Eigen::MatrixXd vectors;     // num_nodes x count when requested, unit discrete L2
  double h = 0;
  double d = 1;
  std::vector<double> in_pi2_d2() const;  // values scaled by d^2/pi^2
};

// The `count` smallest Dirichlet eigenvalues of the 5-point Laplacian on the
// grid, nodes outside the mask reading as zero. Solved by spectrum slicing:
// factorization inertia counts the eigenvalues below each window boundary,
// and shift-inverted Lanczos with full reorthogonalization resolves each
// window, restarting deflated against converged vectors until the window's
// count is met (which also recovers multiple eigenvalues). Every returned
// pair satisfies ||A v - lambda v|| <= 1e-10 * ||A|| with ||A|| the
// Gershgorin bound 8/h^2. Throws std::invalid_argument when count is not
// positive or exceeds the node count.
Spectrum fd_spectrum(const GridDomain& g, int count, bool want_vectors = true);

// ||A v - e v|| / ||v|| over the grid nodes.
double fd_residual(const GridDomain& g, const Eigen::VectorXd& v, double e);

struct GridFunction {
  Eigen::VectorXd values;
  double eigenvalue = 0;
};

// Antisymmetrized sine product t_{m,n}(x,y) = sin(m pi x/d) sin(n pi y/d)
// - sin(n pi x/d) sin(m pi y/d) sampled at the global node coordinates and
// normalized to unit discrete L2; exact eigenvalue pi^2 (m^2+n^2)/d^2. On a
// domain whose boundary lies on the lattice lines and the even-offset
// diagonals this is a Dirichlet eigenfunction. Requires m > n >= 1.
GridFunction triangular_state(int m, int n, const GridDomain& g);

// psi(i-th tile, local xi) = sum_j T_ij phi(j-th tile, local xi), assembled
// node by node through the tile placements; grid points that land on the
// partner's boundary read as zero. Throws std::invalid_argument on a tile
// count mismatch and std::runtime_error when the result vanishes (the sign
// pattern of T is wrong for the pair).
Eigen::VectorXd transplant_eigenvector(const IntMat& t_signed, const Eigen::VectorXd& phi,
                                       const GridDomain& a, const GridDomain& b);

// Number of 4-connected components of constant sign, ignoring nodes with
// |value| < 1e-8 * max |value|.
int nodal_count(const GridDomain& g, const Eigen::VectorXd& v);

// Closed-form mixed boundary-condition pair: a square with one Dirichlet
// and one Neumann pair of opposite sides against a half-square triangle
// with Neumann legs (or the transplanted equivalent), eigenvalues
// pi^2/d^2 ((m+1/2)^2 + n^2), n >= 1, m >= 0   and
// pi^2/(2 d^2) ((m+1/2)^2 + (n+1/2)^2), m > n >= 0,
// both listed ascending up to the cutoff.
struct MixedBcSpectra {
  std::vector<double> square, triangle;
};
MixedBcSpectra mixed_bc_pair_spectra(double d, double cutoff);

// The same spectra as exact integers, scaled by 4 d^2 / pi^2:
// {(2m+1)^2 + 4 n^2} and {((2m+1)^2 + (2n+1)^2) / 2}.
std::vector<long long> mixed_bc_square_scaled(long long cutoff);
std::vector<long long> mixed_bc_triangle_scaled(long long cutoff);

// Entrywise (4 fine - coarse) / 3, the h^2 step-doubling limit.
std::vector<double> richardson(const std::vector<double>& coarse,
                               const std::vector<double>& fine);

// Mean counting function (A/4pi) E - (L/4pi) sqrt(E) + K.
double weyl_counting(const WeylData& w, double e);

// CSV with header index,eigenvalue_pi2_d2.
std::string spectrum_csv(const Spectrum& s);
// CSV grid of node values, rows from the bottom of the domain up, nan
// outside; and a P2 PGM with values mapped linearly to 0..255, sign split
// at 128 (outside painted 128).
std::string eigenvector_csv(const GridDomain& g, const Eigen::VectorXd& v);
std::string eigenvector_pgm(const GridDomain& g, const Eigen::VectorXd& v);

}  // namespace isodrum
