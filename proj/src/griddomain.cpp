#include "isodrum/griddomain.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace isodrum {

namespace {

double dist_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double wx = p.x - a.x, wy = p.y - a.y;
  double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  double dx = wx - t * vx, dy = wy - t * vy;
  return std::hypot(dx, dy);
}

// Signed clearance of p from the convex polygon: the smallest left-hand
// cross product over the counterclockwise edges, negative outside.
double polygon_clearance(const std::vector<Vec2>& verts, const Vec2& p) {
  double best = std::numeric_limits<double>::max();
  int n = static_cast<int>(verts.size());
  for (int k = 0; k < n; ++k) {
    const Vec2& a = verts[k];
    const Vec2& b = verts[(k + 1) % n];
    double ux = b.x - a.x, uy = b.y - a.y;
    double len = std::hypot(ux, uy);
    if (len == 0) continue;
    double c = (ux * (p.y - a.y) - uy * (p.x - a.x)) / len;
    best = std::min(best, c);
  }
  return best;
}

}  // namespace

int GridDomain::node_at(double x, double y) const {
  double fi = (x - x0) / h, fj = (y - y0) / h;
  long i = std::lround(fi), j = std::lround(fj);
  if (std::abs(fi - i) > 1e-6 || std::abs(fj - j) > 1e-6) return -1;
  if (i < 0 || i >= cols || j < 0 || j >= rows) return -1;
  return node_id[cell(static_cast<int>(i), static_cast<int>(j))];
}

GridDomain rasterize(const PlanarDomain& dom, int n_grid) {
  if (n_grid < 2) throw std::invalid_argument("n_grid too small");
  if (dom.tiles.empty()) throw std::invalid_argument("empty domain");

  // Tile scale: leg of a half-square, side of a rectangle tile.
  const PlacedTile& t0 = dom.tiles[0];
  double tile_area = 0;
  {
    double s = 0;
    int n = static_cast<int>(t0.v.size());
    for (int k = 0; k < n; ++k) {
      const Vec2& a = t0.v[k];
      const Vec2& b = t0.v[(k + 1) % n];
      s += a.x * b.y - b.x * a.y;
    }
    tile_area = std::abs(s) / 2;
  }
  double d = t0.v.size() == 3 ? std::sqrt(2 * tile_area) : std::sqrt(tile_area);

  GridDomain g;
  g.d = d;
  g.n_grid = n_grid;
  g.h = d / n_grid;

  double min_x = std::numeric_limits<double>::max(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const PlacedTile& t : dom.tiles) {
    for (const Vec2& v : t.v) {
      if (std::abs(v.x / g.h - std::lround(v.x / g.h)) > 1e-7 ||
          std::abs(v.y / g.h - std::lround(v.y / g.h)) > 1e-7)
        throw std::invalid_argument("domain not grid aligned");
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
    g.tile_iso.push_back(t.iso);
  }
  long i0 = std::lround(min_x / g.h) - 1, i1 = std::lround(max_x / g.h) + 1;
  long j0 = std::lround(min_y / g.h) - 1, j1 = std::lround(max_y / g.h) + 1;
  g.cols = static_cast<int>(i1 - i0 + 1);
  g.rows = static_cast<int>(j1 - j0 + 1);
  g.x0 = i0 * g.h;
  g.y0 = j0 * g.h;

  size_t cells = static_cast<size_t>(g.cols) * g.rows;
  g.inside.assign(cells, 0);
  g.mask.assign(cells, 0.0);
  g.node_id.assign(cells, -1);

  double tol = 1e-6 * g.h;
  std::vector<Isometry> inv;
  std::vector<std::vector<Vec2>> ccw;
  for (const PlacedTile& t : dom.tiles) {
    inv.push_back(t.iso.inverse());
    std::vector<Vec2> verts = t.v;
    double s = 0;
    int n = static_cast<int>(verts.size());
    for (int k = 0; k < n; ++k) {
      const Vec2& a = verts[k];
      const Vec2& b = verts[(k + 1) % n];
      s += a.x * b.y - b.x * a.y;
    }
    if (s < 0) std::reverse(verts.begin(), verts.end());
    ccw.push_back(std::move(verts));
  }

  for (int j = 1; j + 1 < g.rows; ++j) {
    for (int i = 1; i + 1 < g.cols; ++i) {
      Vec2 p{g.x0 + i * g.h, g.y0 + j * g.h};
      bool on_boundary = false;
      for (const BoundaryEdge& e : dom.boundary) {
        if (dist_to_segment(p, e.p, e.q) <= tol) {
          on_boundary = true;
          break;
        }
      }
      if (on_boundary) continue;
      int owner = -1;
      for (size_t t = 0; t < dom.tiles.size() && owner < 0; ++t) {
        if (polygon_clearance(ccw[t], p) >= -tol) owner = static_cast<int>(t);
      }
      if (owner < 0) continue;
      int c = g.cell(i, j);
      g.inside[c] = 1;
      g.mask[c] = 1.0;
      g.node_id[c] = g.num_nodes++;
      g.cell_of.push_back(c);
      g.tile_of.push_back(owner);
      g.local_of.push_back(inv[owner].apply(p));
    }
  }
  if (g.num_nodes == 0) throw std::invalid_argument("grid too coarse for the domain");
  return g;
}

void apply_stencil_scalar(const GridDomain& g, const double* x, double* y) {
  const double inv_h2 = 1.0 / (g.h * g.h);
  const int cols = g.cols, rows = g.rows;
  for (int i = 0; i < cols; ++i) {
    y[i] = 0;
    y[(rows - 1) * cols + i] = 0;
  }
  for (int j = 0; j < rows; ++j) {
    y[j * cols] = 0;
    y[j * cols + cols - 1] = 0;
  }
  for (int j = 1; j + 1 < rows; ++j) {
    const int base = j * cols;
    for (int i = 1; i + 1 < cols; ++i) {
      const int c = base + i;
      double v = 4.0 * x[c];
      v -= x[c - 1];
      v -= x[c + 1];
      v -= x[c - cols];
      v -= x[c + cols];
      y[c] = v * g.mask[c] * inv_h2;
    }
  }
}

namespace {

#if defined(__x86_64__) || defined(_M_X64)
__attribute__((target("avx2"))) void apply_stencil_avx2(const GridDomain& g, const double* x,
                                                        double* y) {
  const double inv_h2 = 1.0 / (g.h * g.h);
  const int cols = g.cols, rows = g.rows;
  for (int i = 0; i < cols; ++i) {
    y[i] = 0;
    y[(rows - 1) * cols + i] = 0;
  }
  for (int j = 0; j < rows; ++j) {
    y[j * cols] = 0;
    y[j * cols + cols - 1] = 0;
  }
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d scale = _mm256_set1_pd(inv_h2);
  for (int j = 1; j + 1 < rows; ++j) {
    const int base = j * cols;
    int i = 1;
    for (; i + 4 <= cols - 1; i += 4) {
      const int c = base + i;
      __m256d v = _mm256_mul_pd(four, _mm256_loadu_pd(x + c));
      v = _mm256_sub_pd(v, _mm256_loadu_pd(x + c - 1));
      v = _mm256_sub_pd(v, _mm256_loadu_pd(x + c + 1));
      v = _mm256_sub_pd(v, _mm256_loadu_pd(x + c - cols));
      v = _mm256_sub_pd(v, _mm256_loadu_pd(x + c + cols));
      v = _mm256_mul_pd(v, _mm256_loadu_pd(g.mask.data() + c));
      _mm256_storeu_pd(y + c, _mm256_mul_pd(v, scale));
    }
    for (; i + 1 < cols; ++i) {
      const int c = base + i;
      double v = 4.0 * x[c];
      v -= x[c - 1];
      v -= x[c + 1];
      v -= x[c - cols];
      v -= x[c + cols];
      y[c] = v * g.mask[c] * inv_h2;
    }
  }
}
#endif

#if defined(__aarch64__)
void apply_stencil_neon(const GridDomain& g, const double* x, double* y) {
  const double inv_h2 = 1.0 / (g.h * g.h);
  const int cols = g.cols, rows = g.rows;
  for (int i = 0; i < cols; ++i) {
    y[i] = 0;
    y[(rows - 1) * cols + i] = 0;
  }
  for (int j = 0; j < rows; ++j) {
    y[j * cols] = 0;
    y[j * cols + cols - 1] = 0;
  }
  const float64x2_t four = vdupq_n_f64(4.0);
  const float64x2_t scale = vdupq_n_f64(inv_h2);
  for (int j = 1; j + 1 < rows; ++j) {
    const int base = j * cols;
    int i = 1;
    for (; i + 2 <= cols - 1; i += 2) {
      const int c = base + i;
      float64x2_t v = vmulq_f64(four, vld1q_f64(x + c));
      v = vsubq_f64(v, vld1q_f64(x + c - 1));
      v = vsubq_f64(v, vld1q_f64(x + c + 1));
      v = vsubq_f64(v, vld1q_f64(x + c - cols));
      v = vsubq_f64(v, vld1q_f64(x + c + cols));
      v = vmulq_f64(v, vld1q_f64(g.mask.data() + c));
      vst1q_f64(y + c, vmulq_f64(v, scale));
    }
    for (; i + 1 < cols; ++i) {
      const int c = base + i;
      double v = 4.0 * x[c];
      v -= x[c - 1];
      v -= x[c + 1];
      v -= x[c - cols];
      v -= x[c + cols];
      y[c] = v * g.mask[c] * inv_h2;
    }
  }
}
#endif

using StencilFn = void (*)(const GridDomain&, const double*, double*);

struct KernelChoice {
  StencilFn fn;
  const char* name;
};

KernelChoice pick_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return {apply_stencil_avx2, "avx2"};
#endif
#if defined(__aarch64__)
  return {apply_stencil_neon, "neon"};
#endif
  return {apply_stencil_scalar, "scalar"};
}

const KernelChoice& kernel() {
  static const KernelChoice choice = pick_kernel();
  return choice;
}

}  // namespace

void apply_stencil(const GridDomain& g, const double* x, double* y) { kernel().fn(g, x, y); }

const char* stencil_kernel_name() { return kernel().name; }

void scatter_nodes(const GridDomain& g, const double* compact, double* padded) {
  size_t cells = static_cast<size_t>(g.cols) * g.rows;
  for (size_t c = 0; c < cells; ++c) padded[c] = 0;
  for (int k = 0; k < g.num_nodes; ++k) padded[g.cell_of[k]] = compact[k];
}

void gather_nodes(const GridDomain& g, const double* padded, double* compact) {
  for (int k = 0; k < g.num_nodes; ++k) compact[k] = padded[g.cell_of[k]];
}

}  // namespace isodrum
