#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "isodrum/geometry.h"
#include "isodrum/griddomain.h"
#include "isodrum/pairspec.h"
#include "isodrum/spectral.h"
#include "isodrum/transplant.h"

using namespace isodrum;

namespace {

constexpr double kPi = 3.14159265358979323846;

// reference finite-difference eigenvalues of the celebrated pair, units
// pi^2/d^2 (extrapolated column of the published comparison table)
constexpr double kFdReference[10] = {1.028936, 1.481865, 2.098249, 2.649715, 2.938176,
                                     3.732689, 4.295193, 4.677665, 5.000002, 5.291475};

double max_rel_gap(const Spectrum& a, const Spectrum& b, int count) {
  double worst = 0;
  for (int i = 0; i < count; i++)
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / a.values[i]);
  return worst;
}

}  // namespace

TEST_CASE("celebrated pair matches the reference table") {
  auto spec = catalog_pair("7_3");
  LatticePair pr = framed_pair_7_3(spec.gens[0], spec.gens[1], 1.0);

  GridDomain a80 = rasterize(pr.first, 80);
  GridDomain b80 = rasterize(pr.second, 80);
  Spectrum sa80 = fd_spectrum(a80, 10, false);
  Spectrum sb80 = fd_spectrum(b80, 10, false);

  // pairwise isospectrality at n_grid = 80
  for (int i = 0; i < 10; i++)
    CHECK(std::abs(sa80.values[i] - sb80.values[i]) / sa80.values[i] < 5e-3);

  // Richardson-extrapolated values against the reference column
  GridDomain a160 = rasterize(pr.first, 160);
  Spectrum sa160 = fd_spectrum(a160, 10, false);
  auto rich = richardson(sa80.values, sa160.values);
  for (int i = 0; i < 10; i++) {
    double got = rich[i] / (kPi * kPi);
    CHECK(std::abs(got - kFdReference[i]) / kFdReference[i] < 1e-2);
  }

  // the ninth mode is the first triangular state
  CHECK(std::abs(sa80.values[8] - 5 * kPi * kPi) / (5 * kPi * kPi) < 5e-3);
  CHECK(std::abs(rich[8] / (kPi * kPi) - 5.0) < 1e-3);
}

TEST_CASE("fd isospectrality across the constructible catalog") {
  int constructed = 0;
  for (const auto& spec : catalog()) {
    if (spec.corrupt) continue;
    auto pr = half_square_pair(spec.gens[0], spec.gens[1], 1.0);
    if (!pr) {
      std::printf("%-6s no planar lattice unfolding, skipped\n", spec.name.c_str());
      continue;
    }
    constructed++;

    GridDomain a80 = rasterize(pr->first, 80);
    GridDomain b80 = rasterize(pr->second, 80);
    Spectrum sa80 = fd_spectrum(a80, 10, true);
    Spectrum sb80 = fd_spectrum(b80, 10, false);
    double gap80 = max_rel_gap(sa80, sb80, 10);

    // the loose contract, then the aligned-grid reality: the members share
    // a discrete transplantation, so the gap sits at the solver floor
    CHECK(gap80 < 5e-3);
    CHECK(gap80 < 1e-9);

    GridDomain a160 = rasterize(pr->first, 160);
    GridDomain b160 = rasterize(pr->second, 160);
    Spectrum sa160 = fd_spectrum(a160, 10, false);
    Spectrum sb160 = fd_spectrum(b160, 10, false);
    double gap160 = max_rel_gap(sa160, sb160, 10);
    CHECK(gap160 <= std::max(gap80 / 3, 1e-11));

    // transplantation-exact check: the transplanted ground state is an
    // eigenvector of the partner at the same eigenvalue
    auto t = solve_signed_transplantation(spec.gens[0], spec.gens[1]);
    REQUIRE(t.has_value());
    Eigen::VectorXd psi = transplant_eigenvector(*t, sa80.vectors.col(0), a80, b80);
    double res = fd_residual(b80, psi / psi.norm(), sa80.values[0]) / sa80.values[0];
    CHECK(res < 1e-8);

    std::printf("%-6s gap80 %.2e  gap160 %.2e  transplant residual %.2e\n",
                spec.name.c_str(), gap80, gap160, res);
  }
  CHECK(constructed >= 11);
}

TEST_CASE("counting function stays within the three-term expansion") {
  auto spec = catalog_pair("7_3");
  LatticePair pr = framed_pair_7_3(spec.gens[0], spec.gens[1], 1.0);
  GridDomain g80 = rasterize(pr.first, 80);
  GridDomain g160 = rasterize(pr.first, 160);
  Spectrum s80 = fd_spectrum(g80, 201, false);
  Spectrum s160 = fd_spectrum(g160, 201, false);
  auto rich = richardson(s80.values, s160.values);

  WeylData w = weyl_data(pr.first);
  CHECK(w.area == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(w.corner_constant == doctest::Approx(5.0 / 12).epsilon(1e-12));

  // N(E) measured between consecutive modes against the smooth expansion;
  // the fluctuation must stay bounded, with no drift over the tail
  double worst = 0, tail = 0;
  for (int k = 1; k <= 200; k++) {
    double e = (rich[k - 1] + rich[k]) / 2;
    double r = std::abs(k - weyl_counting(w, e));
    worst = std::max(worst, r);
    if (k > 150) tail = std::max(tail, r);
  }
  std::printf("counting residual: max %.3f over 200 modes, tail max %.3f\n", worst, tail);
  CHECK(worst < 2.5);
  CHECK(tail < 2.5);

  // ranks of the first two triangular states in the extrapolated spectrum
  CHECK(std::abs(rich[8] / (kPi * kPi) - 5.0) < 1e-3);
  CHECK(std::abs(rich[20] / (kPi * kPi) - 10.0) < 1e-3);
}

TEST_CASE("nodal counts respect the Courant bound") {
  auto spec = catalog_pair("7_3");
  LatticePair pr = framed_pair_7_3(spec.gens[0], spec.gens[1], 1.0);
  GridDomain g = rasterize(pr.first, 80);
  Spectrum s = fd_spectrum(g, 25, true);
  for (int k = 0; k < 25; k++) {
    int domains = nodal_count(g, s.vectors.col(k));
    CHECK(domains >= 1);
    CHECK(domains <= k + 1);
  }
}
