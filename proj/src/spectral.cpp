#include "isodrum/spectral.h"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace isodrum {

namespace {

constexpr double kPi = 3.14159265358979323846;

using SpMat = Eigen::SparseMatrix<double>;

SpMat assemble(const GridDomain& g) {
  double inv_h2 = 1.0 / (g.h * g.h);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(g.num_nodes) * 5);
  for (int k = 0; k < g.num_nodes; ++k) {
    int c = g.cell_of[k];
    trips.emplace_back(k, k, 4.0 * inv_h2);
    for (int nb : {c - 1, c + 1, c - g.cols, c + g.cols}) {
      int j = g.node_id[nb];
      if (j >= 0) trips.emplace_back(k, j, -inv_h2);
    }
  }
  SpMat a(g.num_nodes, g.num_nodes);
  a.setFromTriplets(trips.begin(), trips.end());
  return a;
}

// Factorization inertia: the number of eigenvalues of `a` below sigma.
// Near-singular shifts make the unpivoted LDLT blow up, so sigma is nudged
// until every pivot is clean; the caller keeps the adjusted value so window
// membership stays consistent with the counts.
int count_below(const SpMat& a, const SpMat& id, double& sigma, double anorm) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    SpMat shifted = a - sigma * id;
    Eigen::SimplicialLDLT<SpMat> ldlt(shifted);
    if (ldlt.info() == Eigen::Success) {
      Eigen::VectorXd dv = ldlt.vectorD();
      bool bad = false;
      int neg = 0;
      for (int i = 0; i < dv.size(); ++i) {
        double v = dv[i];
        if (!std::isfinite(v) || std::abs(v) < 1e-13 * anorm) {
          bad = true;
          break;
        }
        if (v < 0) ++neg;
      }
      if (!bad) return neg;
    }
    sigma *= 1.0 + 7e-6 * (attempt + 1);
  }
  throw std::runtime_error("inertia factorization failed");
}

struct EigPair {
  double value;
  Eigen::VectorXd vec;
};

void deflate(Eigen::VectorXd& w, const std::vector<EigPair>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const EigPair& p : basis) w -= p.vec.dot(w) * p.vec;
}

// All eigenpairs of `a` in [lo, hi), whose count the inertia probes pinned
// to `expect`. Shift-inverted Lanczos at the window midpoint with full
// reorthogonalization; each accepted pair is verified directly against
// ||A v - lambda v|| <= res_tol, and runs restart deflated against the
// accepted vectors until the window is complete, which also separates
// multiple eigenvalues (one Krylov run sees a single copy).
std::vector<EigPair> window_eig(const SpMat& a, double anorm, double lo, double hi, int expect,
                                double res_tol, std::mt19937& rng) {
  std::vector<EigPair> found;
  if (expect <= 0) return found;
  const int n = static_cast<int>(a.rows());

  double sigma = 0.5 * (lo + hi);
  Eigen::SparseLU<SpMat> lu;
  SpMat id(n, n);
  id.setIdentity();
  for (int attempt = 0;; ++attempt) {
    SpMat shifted = a - sigma * id;
    lu.compute(shifted);
    if (lu.info() == Eigen::Success) break;
    if (attempt >= 5) throw std::runtime_error("window factorization failed");
    sigma += (hi - lo) * 0.037 * (attempt + 1);
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int restart = 0; restart < 12 && static_cast<int>(found.size()) < expect; ++restart) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    deflate(v, found);
    double nv = v.norm();
    if (nv < 1e-8) continue;
    v /= nv;

    int kmax = std::min(n, expect - static_cast<int>(found.size()) + 70);
    Eigen::MatrixXd big_v(n, kmax);
    std::vector<double> alpha, beta;
    Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);
    std::vector<EigPair> run;
    int last_cheap = 0, stagnant = 0;

    for (int k = 0; k < kmax; ++k) {
      big_v.col(k) = v;
      Eigen::VectorXd w = lu.solve(v);
      deflate(w, found);
      double ak = v.dot(w);
      alpha.push_back(ak);
      w -= ak * v;
      if (k > 0) w -= beta.back() * prev;
      for (int pass = 0; pass < 2; ++pass)
        w -= big_v.leftCols(k + 1) * (big_v.leftCols(k + 1).transpose() * w);
      double bk = w.norm();
      bool exhausted = bk < 1e-12;

      bool check_now = exhausted || k + 1 == kmax || (k + 1) % 6 == 0;
      if (check_now) {
        int kk = k + 1;
        Eigen::MatrixXd trid = Eigen::MatrixXd::Zero(kk, kk);
        for (int i = 0; i < kk; ++i) {
          trid(i, i) = alpha[i];
          if (i + 1 < kk) trid(i, i + 1) = trid(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(trid);
        int cheap_ok = 0;
        std::vector<int> candidates;
        for (int i = 0; i < kk; ++i) {
          double theta = tes.eigenvalues()[i];
          if (std::abs(theta) < 1e-300) continue;
          double lambda = sigma + 1.0 / theta;
          if (lambda < lo || lambda >= hi) continue;
          candidates.push_back(i);
          double cheap = (anorm + std::abs(sigma)) * bk *
                         std::abs(tes.eigenvectors()(kk - 1, i)) / std::abs(theta);
          if (cheap <= 30 * res_tol) ++cheap_ok;
        }
        int needed = expect - static_cast<int>(found.size());
        bool attempt_accept =
            exhausted || k + 1 == kmax || cheap_ok >= needed || stagnant >= 5;
        if (attempt_accept) {
          run.clear();
          for (int i : candidates) {
            Eigen::VectorXd x = big_v.leftCols(kk) * tes.eigenvectors().col(i);
            deflate(x, found);
            double nx = x.norm();
            if (nx < 1e-6) continue;
            x /= nx;
            double lambda = sigma + 1.0 / tes.eigenvalues()[i];
            double res = (a * x - lambda * x).norm();
            if (res <= res_tol) run.push_back({lambda, std::move(x)});
          }
          if (static_cast<int>(run.size()) >= needed || exhausted || k + 1 == kmax) break;
          stagnant = 0;
        }
        stagnant = cheap_ok > last_cheap ? 0 : stagnant + 1;
        last_cheap = std::max(last_cheap, cheap_ok);
      }
      if (exhausted) break;
      beta.push_back(bk);
      prev = v;
      v = w / bk;
    }

    std::sort(run.begin(), run.end(),
              [](const EigPair& x, const EigPair& y) { return x.value < y.value; });
    for (EigPair& p : run) {
      if (static_cast<int>(found.size()) >= expect) break;
      found.push_back(std::move(p));
    }
  }
  if (static_cast<int>(found.size()) < expect)
    throw std::runtime_error("eigensolve failed to converge in a window");
  std::sort(found.begin(), found.end(),
            [](const EigPair& x, const EigPair& y) { return x.value < y.value; });
  return found;
}

}  // namespace

std::vector<double> Spectrum::in_pi2_d2() const {
  std::vector<double> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) out[i] = values[i] * d * d / (kPi * kPi);
  return out;
}

Spectrum fd_spectrum(const GridDomain& g, int count, bool want_vectors) {
  if (count <= 0) throw std::invalid_argument("count must be positive");
  if (count > g.num_nodes) throw std::invalid_argument("count exceeds the node count");
  const int n = g.num_nodes;
  const double anorm = 8.0 / (g.h * g.h);
  const double res_tol = 1e-10 * anorm;

  Spectrum spec;
  spec.h = g.h;
  spec.d = g.d;

  SpMat a = assemble(g);

  if (n <= 600) {
    Eigen::MatrixXd dense(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    for (int i = 0; i < count; ++i) spec.values.push_back(es.eigenvalues()[i]);
    if (want_vectors) {
      spec.vectors = es.eigenvectors().leftCols(count);
      for (int i = 0; i < count; ++i) spec.vectors.col(i) /= g.h * spec.vectors.col(i).norm();
    }
    return spec;
  }

  SpMat id(n, n);
  id.setIdentity();

  // Upper slicing bound from the Weyl count, confirmed by inertia.
  double area = n * g.h * g.h;
  double e_hi = 4 * kPi * (count + 2 + 0.05 * count) / area;
  int c_hi = 0;
  for (int attempt = 0;; ++attempt) {
    e_hi = std::min(e_hi, 1.05 * anorm);
    c_hi = count_below(a, id, e_hi, anorm);
    if (c_hi >= count) break;
    if (attempt >= 14) throw std::runtime_error("slicing bound search failed");
    e_hi *= 1.5;
  }

  // Window boundaries, roughly even in eigenvalue count since the Weyl
  // density is near-uniform in E for a plane domain.
  int windows = (c_hi + 23) / 24;
  std::vector<double> bounds{0.0};
  std::vector<int> counts{0};
  for (int wdx = 1; wdx < windows; ++wdx) {
    double sigma = e_hi * wdx / windows;
    int c = count_below(a, id, sigma, anorm);
    bounds.push_back(sigma);
    counts.push_back(c);
  }
  bounds.push_back(e_hi);
  counts.push_back(c_hi);

  std::mt19937 rng(20260817);
  std::vector<EigPair> all;
  for (size_t wdx = 0; wdx + 1 < bounds.size(); ++wdx) {
    int expect = counts[wdx + 1] - counts[wdx];
    std::vector<EigPair> part =
        window_eig(a, anorm, bounds[wdx], bounds[wdx + 1], expect, res_tol, rng);
    for (EigPair& p : part) all.push_back(std::move(p));
    if (static_cast<int>(all.size()) >= count) break;
  }

  std::sort(all.begin(), all.end(),
            [](const EigPair& x, const EigPair& y) { return x.value < y.value; });
  if (want_vectors) spec.vectors.resize(n, count);
  for (int i = 0; i < count; ++i) {
    spec.values.push_back(all[i].value);
    if (want_vectors) spec.vectors.col(i) = all[i].vec / (g.h * all[i].vec.norm());
  }
  return spec;
}

double fd_residual(const GridDomain& g, const Eigen::VectorXd& v, double e) {
  if (v.size() != g.num_nodes) throw std::invalid_argument("vector size mismatch");
  size_t cells = static_cast<size_t>(g.cols) * g.rows;
  std::vector<double> padded(cells), out(cells);
  scatter_nodes(g, v.data(), padded.data());
  apply_stencil(g, padded.data(), out.data());
  Eigen::VectorXd av(g.num_nodes);
  gather_nodes(g, out.data(), av.data());
  return (av - e * v).norm() / v.norm();
}

GridFunction triangular_state(int m, int n, const GridDomain& g) {
  if (n < 1 || m <= n) throw std::invalid_argument("requires m > n >= 1");
  GridFunction f;
  f.eigenvalue = kPi * kPi * (m * m + n * n) / (g.d * g.d);
  f.values.resize(g.num_nodes);
  for (int k = 0; k < g.num_nodes; ++k) {
    Vec2 p = g.world(k);
    double sx = kPi * p.x / g.d, sy = kPi * p.y / g.d;
    f.values[k] = std::sin(m * sx) * std::sin(n * sy) - std::sin(n * sx) * std::sin(m * sy);
  }
  double norm = g.h * f.values.norm();
  if (norm < 1e-12) throw std::runtime_error("triangular state vanishes on this grid");
  f.values /= norm;
  return f;
}

Eigen::VectorXd transplant_eigenvector(const IntMat& t_signed, const Eigen::VectorXd& phi,
                                       const GridDomain& a, const GridDomain& b) {
  int d = t_signed.size();
  if (static_cast<int>(a.tile_iso.size()) != d || static_cast<int>(b.tile_iso.size()) != d)
    throw std::invalid_argument("tile count mismatch");
  if (phi.size() != a.num_nodes) throw std::invalid_argument("vector size mismatch");

  Eigen::VectorXd psi = Eigen::VectorXd::Zero(b.num_nodes);
  for (int k = 0; k < b.num_nodes; ++k) {
    int i = b.tile_of[k];
    Vec2 xi = b.local_of[k];
    double acc = 0;
    for (int j = 0; j < d; ++j) {
      int64_t tij = t_signed(i, j);
      if (tij == 0) continue;
      Vec2 w = a.tile_iso[j].apply(xi);
      int node = a.node_at(w.x, w.y);
      if (node >= 0) acc += static_cast<double>(tij) * phi[node];
    }
    psi[k] = acc;
  }
  if (psi.norm() <= 1e-12 * phi.norm())
    throw std::runtime_error("transplanted eigenvector vanished");
  return psi;
}

int nodal_count(const GridDomain& g, const Eigen::VectorXd& v) {
  if (v.size() != g.num_nodes) throw std::invalid_argument("vector size mismatch");
  double vmax = v.cwiseAbs().maxCoeff();
  double floor = 1e-8 * vmax;
  std::vector<signed char> sign(static_cast<size_t>(g.cols) * g.rows, 0);
  for (int k = 0; k < g.num_nodes; ++k) {
    if (std::abs(v[k]) < floor) continue;
    sign[g.cell_of[k]] = v[k] > 0 ? 1 : -1;
  }
  std::vector<char> seen(sign.size(), 0);
  std::vector<int> stack;
  int components = 0;
  for (int k = 0; k < g.num_nodes; ++k) {
    int c0 = g.cell_of[k];
    if (!sign[c0] || seen[c0]) continue;
    ++components;
    signed char s = sign[c0];
    seen[c0] = 1;
    stack.assign(1, c0);
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int nb : {c - 1, c + 1, c - g.cols, c + g.cols}) {
        if (sign[nb] == s && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
  }
  return components;
}

MixedBcSpectra mixed_bc_pair_spectra(double d, double cutoff) {
  if (!(d > 0)) throw std::invalid_argument("d must be positive");
  MixedBcSpectra out;
  double unit = kPi * kPi / (d * d);
  for (int m = 0; unit * (m + 0.5) * (m + 0.5) <= cutoff; ++m)
    for (int n = 1;; ++n) {
      double e = unit * ((m + 0.5) * (m + 0.5) + n * n);
      if (e > cutoff) break;
      out.square.push_back(e);
    }
  for (int n = 0; 0.5 * unit * (n + 1.5) * (n + 1.5) <= cutoff; ++n)
    for (int m = n + 1;; ++m) {
      double e = 0.5 * unit * ((m + 0.5) * (m + 0.5) + (n + 0.5) * (n + 0.5));
      if (e > cutoff) break;
      out.triangle.push_back(e);
    }
  std::sort(out.square.begin(), out.square.end());
  std::sort(out.triangle.begin(), out.triangle.end());
  return out;
}

std::vector<long long> mixed_bc_square_scaled(long long cutoff) {
  std::vector<long long> out;
  for (long long m = 0; (2 * m + 1) * (2 * m + 1) <= cutoff; ++m)
    for (long long n = 1;; ++n) {
      long long e = (2 * m + 1) * (2 * m + 1) + 4 * n * n;
      if (e > cutoff) break;
      out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> mixed_bc_triangle_scaled(long long cutoff) {
  std::vector<long long> out;
  for (long long n = 0; (2 * n + 3) * (2 * n + 3) + (2 * n + 1) * (2 * n + 1) <= 2 * cutoff; ++n)
    for (long long m = n + 1;; ++m) {
      long long e = ((2 * m + 1) * (2 * m + 1) + (2 * n + 1) * (2 * n + 1)) / 2;
      if (e > cutoff) break;
      out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> richardson(const std::vector<double>& coarse,
                               const std::vector<double>& fine) {
  size_t n = std::min(coarse.size(), fine.size());
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = (4 * fine[i] - coarse[i]) / 3;
  return out;
}

double weyl_counting(const WeylData& w, double e) {
  return (w.area * e - w.perimeter * std::sqrt(e)) / (4 * kPi) + w.corner_constant;
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "index,eigenvalue_pi2_d2\n";
  std::vector<double> scaled = s.in_pi2_d2();
  char buf[40];
  for (size_t i = 0; i < scaled.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", scaled[i]);
    out << (i + 1) << "," << buf << "\n";
  }
  return out.str();
}

std::string eigenvector_csv(const GridDomain& g, const Eigen::VectorXd& v) {
  if (v.size() != g.num_nodes) throw std::invalid_argument("vector size mismatch");
  std::ostringstream out;
  char buf[40];
  for (int j = g.rows - 2; j >= 1; --j) {
    for (int i = 1; i + 1 < g.cols; ++i) {
      if (i > 1) out << ",";
      int node = g.node_id[g.cell(i, j)];
      if (node < 0) {
        out << "nan";
      } else {
        std::snprintf(buf, sizeof buf, "%.9g", v[node]);
        out << buf;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string eigenvector_pgm(const GridDomain& g, const Eigen::VectorXd& v) {
  if (v.size() != g.num_nodes) throw std::invalid_argument("vector size mismatch");
  double vmax = std::max(v.cwiseAbs().maxCoeff(), 1e-300);
  std::ostringstream out;
  out << "P2\n" << (g.cols - 2) << " " << (g.rows - 2) << "\n255\n";
  for (int j = g.rows - 2; j >= 1; --j) {
    for (int i = 1; i + 1 < g.cols; ++i) {
      int node = g.node_id[g.cell(i, j)];
      int pix = 128;
      if (node >= 0) pix = 128 + static_cast<int>(std::lround(127 * v[node] / vmax));
      out << std::clamp(pix, 0, 255) << (i + 2 == g.cols ? "\n" : " ");
    }
  }
  return out.str();
}

}  // namespace isodrum
