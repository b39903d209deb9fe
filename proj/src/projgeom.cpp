#include "isodrum/projgeom.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "isodrum/adjacency.h"
#include "isodrum/geometry.h"

namespace isodrum {

namespace {

int ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > (1LL << 62)) throw std::overflow_error("power too large");
  }
  return static_cast<int>(r);
}

std::vector<int> mat_vec(const GF& f, const std::vector<int>& a, const std::vector<int>& v) {
  int m = static_cast<int>(v.size());
  std::vector<int> w(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w[i] = f.add(w[i], f.mul(a[i * m + j], v[j]));
  return w;
}

std::vector<int> mat_mul(const GF& f, const std::vector<int>& a, const std::vector<int>& b,
                         int m) {
  std::vector<int> c(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < m; ++l) {
      int ail = a[i * m + l];
      if (ail == 0) continue;
      for (int j = 0; j < m; ++j) c[i * m + j] = f.add(c[i * m + j], f.mul(ail, b[l * m + j]));
    }
  return c;
}

std::vector<int> mat_frob(const GF& f, std::vector<int> a, int e) {
  for (int& x : a) x = f.frob(x, e);
  return a;
}

// Gauss-Jordan inverse; empty vector when singular.
std::vector<int> mat_inverse(const GF& f, std::vector<int> a, int m) {
  std::vector<int> inv(m * m, 0);
  for (int i = 0; i < m; ++i) inv[i * m + i] = 1;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (a[r * m + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    for (int j = 0; j < m; ++j) {
      std::swap(a[piv * m + j], a[col * m + j]);
      std::swap(inv[piv * m + j], inv[col * m + j]);
    }
    int s = f.inv(a[col * m + col]);
    for (int j = 0; j < m; ++j) {
      a[col * m + j] = f.mul(s, a[col * m + j]);
      inv[col * m + j] = f.mul(s, inv[col * m + j]);
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r * m + col] == 0) continue;
      int c = a[r * m + col];
      for (int j = 0; j < m; ++j) {
        a[r * m + j] = f.sub(a[r * m + j], f.mul(c, a[col * m + j]));
        inv[r * m + j] = f.sub(inv[r * m + j], f.mul(c, inv[col * m + j]));
      }
    }
  }
  return inv;
}

std::vector<int> mat_transpose(const std::vector<int>& a, int m) {
  std::vector<int> t(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[j * m + i] = a[i * m + j];
  return t;
}

// a == lambda I for some nonzero lambda?
bool is_scalar(const std::vector<int>& a, int m) {
  int lambda = a[0];
  if (lambda == 0) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a[i * m + j] != (i == j ? lambda : 0)) return false;
  return true;
}

}  // namespace

int ProjectiveSpace::points_per_hyperplane() const {
  return (ipow(q, n) - 1) / (q - 1);
}

int ProjectiveSpace::hyperplane_meet() const { return (ipow(q, n - 1) - 1) / (q - 1); }

int ProjectiveSpace::point_index(const std::vector<int>& v) const {
  std::vector<int> w = v;
  int lead = 0;
  while (lead < static_cast<int>(w.size()) && w[lead] == 0) ++lead;
  if (lead == static_cast<int>(w.size())) throw std::invalid_argument("zero vector");
  int s = field.inv(w[lead]);
  for (int& x : w) x = field.mul(s, x);
  auto it = std::lower_bound(points.begin(), points.end(), w);
  if (it == points.end() || *it != w) throw std::logic_error("point not found");
  return static_cast<int>(it - points.begin());
}

bool ProjectiveSpace::incident(int hyper, int point) const {
  int s = 0;
  for (int i = 0; i <= n; ++i)
    s = field.add(s, field.mul(points[hyper][i], points[point][i]));
  return s == 0;
}

ProjectiveSpace build_pg(int n, int q) {
  if (n < 1) throw std::invalid_argument("projective dimension must be >= 1");
  ProjectiveSpace space{n, q, GF(q), {}};
  int m = n + 1;
  int total = ipow(q, m);
  for (int enc = 1; enc < total; ++enc) {
    std::vector<int> v(m);
    int e = enc;
    for (int i = m - 1; i >= 0; --i) {
      v[i] = e % q;
      e /= q;
    }
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) space.points.push_back(v);
  }
  std::sort(space.points.begin(), space.points.end());
  return space;
}

IncidenceMatrix incidence_matrix(const ProjectiveSpace& space) {
  int npts = space.num_points();
  IncidenceMatrix inc;
  inc.k = space.points_per_hyperplane();
  inc.lambda = space.hyperplane_meet();
  inc.t = IntMat(npts);
  for (int h = 0; h < npts; ++h)
    for (int p = 0; p < npts; ++p) inc.t(h, p) = space.incident(h, p) ? 1 : 0;
  return inc;
}

RatMat incidence_inverse(const ProjectiveSpace& space) {
  IncidenceMatrix inc = incidence_matrix(space);
  int npts = space.num_points();
  Rat scale(1, ipow(space.q, space.n - 1));
  Rat shift(inc.lambda, inc.k);
  RatMat out(npts, npts);
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      out(i, j) = scale * (Rat(inc.t(j, i)) - shift);
  return out;
}

std::vector<Collineation> enumerate_involutions(const ProjectiveSpace& space) {
  const GF& f = space.field;
  int m = space.n + 1;
  int q = space.q;
  long long scan = 1;
  for (int i = 0; i < m * m; ++i) {
    scan *= q;
    if (scan > 20'000'000) throw std::length_error("collineation group scan too large");
  }

  int npts = space.num_points();
  int hyper_size = space.points_per_hyperplane();
  std::set<std::vector<int>> seen;
  std::vector<Collineation> out;

  auto try_map = [&](const std::vector<int>& a, int frob_exp) {
    std::vector<int> img(npts);
    for (int i = 0; i < npts; ++i) {
      std::vector<int> v = space.points[i];
      if (frob_exp) for (int& x : v) x = f.frob(x, frob_exp);
      img[i] = space.point_index(mat_vec(f, a, v));
    }
    bool identity = true;
    for (int i = 0; i < npts; ++i)
      if (img[i] != i) {
        identity = false;
        break;
      }
    if (identity || !seen.insert(img).second) return;

    Collineation col;
    col.mat = a;
    col.frob_exp = frob_exp;
    col.on_points = Perm{img};

    std::vector<int> binv = mat_inverse(f, a, m);
    std::vector<int> bt = mat_transpose(binv, m);
    std::vector<int> himg(npts);
    for (int h = 0; h < npts; ++h) {
      std::vector<int> v = space.points[h];
      if (frob_exp) for (int& x : v) x = f.frob(x, frob_exp);
      himg[h] = space.point_index(mat_vec(f, bt, v));
    }
    col.on_hyperplanes = Perm{himg};
    col.fixed_count = col.on_points.num_fixed();

    if (frob_exp) {
      col.type = "baer";
    } else if (f.p() % 2 == 1) {
      col.type = col.fixed_count == hyper_size + 1 ? "homology" : "linear";
    } else {
      col.type = col.fixed_count == hyper_size ? "elation" : "linear";
    }
    out.push_back(std::move(col));
  };

  long long total = 1;
  for (int i = 0; i < m * m; ++i) total *= q;
  for (long long enc = 0; enc < total; ++enc) {
    std::vector<int> a(m * m);
    long long e = enc;
    for (int i = m * m - 1; i >= 0; --i) {
      a[i] = static_cast<int>(e % q);
      e /= q;
    }
    if (is_scalar(a, m)) {
      // scalars act trivially; their semilinear companions are handled below
    } else {
      std::vector<int> a2 = mat_mul(f, a, a, m);
      if (is_scalar(a2, m)) try_map(a, 0);
    }
    if (f.has_order2_automorphism()) {
      int half = f.k() / 2;
      std::vector<int> aphi = mat_frob(f, a, half);
      std::vector<int> prod = mat_mul(f, a, aphi, m);
      if (is_scalar(prod, m)) try_map(a, half);
    }
  }

  std::sort(out.begin(), out.end(), [](const Collineation& x, const Collineation& y) {
    if (x.fixed_count != y.fixed_count) return x.fixed_count < y.fixed_count;
    return x.on_points.images() < y.on_points.images();
  });
  return out;
}

std::vector<SearchResult> search_isospectral_data(const ProjectiveSpace& space,
                                                  int allow_cycle_rank) {
  std::vector<Collineation> invs = enumerate_involutions(space);
  int npts = space.num_points();
  int ninv = static_cast<int>(invs.size());

  // Bucket involutions by number of moved points so triples failing the
  // edge-count equation are never materialized.
  std::map<int, std::vector<int>> by_moved;
  for (int i = 0; i < ninv; ++i) by_moved[npts - invs[i].fixed_count].push_back(i);

  std::vector<SearchResult> results;
  // Gluings rejected by the geometric probe, kept up to equivalence so each
  // class is probed once.
  std::vector<std::pair<std::array<Perm, 3>, std::array<Perm, 3>>> rejected;
  auto consider = [&](int i, int j, int k, int rank) {
    std::array<Perm, 3> gp = {invs[i].on_points, invs[j].on_points, invs[k].on_points};
    ColoredGraph g1 = involution_graph(gp);
    if (!g1.connected) return;
    std::array<Perm, 3> gh = {invs[i].on_hyperplanes, invs[j].on_hyperplanes,
                              invs[k].on_hyperplanes};
    ColoredGraph g2 = involution_graph(gh);
    if (!g2.connected) return;
    // Congruent members give a single shape, not a pair.
    if (conjugating_map(gp, gh).has_value()) return;
    for (const auto& r : results)
      if (pairs_equivalent(r.gens_points, r.gens_hyper, gp, gh)) return;
    if (rank > 0) {
      for (const auto& r : rejected)
        if (pairs_equivalent(r.first, r.second, gp, gh)) return;
      // A cycle must close around a tile vertex without stacking copies;
      // gluings no tile shape can draw in the plane are discarded.
      if (!pair_realizable(gp, gh)) {
        rejected.push_back({gp, gh});
        return;
      }
    }
    results.push_back({{i, j, k}, gp, gh, rank});
  };

  for (int rank = 0; rank <= allow_cycle_rank; ++rank) {
    int target = 2 * (npts - 1 + rank);
    for (int i = 0; i < ninv; ++i) {
      int mi = npts - invs[i].fixed_count;
      for (int j = i + 1; j < ninv; ++j) {
        int mj = npts - invs[j].fixed_count;
        int need = target - mi - mj;
        auto it = by_moved.find(need);
        if (it == by_moved.end()) continue;
        for (int k : it->second) {
          if (k <= j) continue;
          consider(i, j, k, rank);
        }
      }
    }
  }
  return results;
}

std::vector<PairSpec> search_results_as_pairs(const ProjectiveSpace& space,
                                              const std::vector<SearchResult>& results) {
  std::string label = "PGL(" + std::to_string(space.n + 1) + "," + std::to_string(space.q) + ")";
  if (space.n == 2 && space.q == 2) label = "PSL(3,2)";
  if (space.n == 2 && space.q == 3) label = "PSL(3,3)";
  if (space.n == 3 && space.q == 2) label = "PSL(4,2)";
  if (space.n == 2 && space.q == 4) label = "PSL(3,4)";

  std::vector<PairSpec> out;
  for (size_t idx = 0; idx < results.size(); ++idx) {
    PairSpec p;
    p.name = std::to_string(space.num_points()) + "_s" + std::to_string(idx + 1);
    p.group_label = label;
    p.d = space.num_points();
    p.gens[0] = results[idx].gens_points;
    p.gens[1] = results[idx].gens_hyper;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ConstraintSolution> constraint_table(int max_r, int max_q) {
  std::vector<ConstraintSolution> out;
  auto is_square = [](int q) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(q)) + 0.5);
    return s * s == q ? s : 0;
  };
  for (int q = 2; q <= max_q; ++q) {
    if (!is_prime_power(q)) continue;
    int p = is_square(q);
    for (int r = 3; r <= max_r; ++r) {
      long long lq = q;
      if (!p && q % 2 == 0 && r * lq * lq == 2 * (lq * lq + lq))
        out.push_back({"even-tree", r, q});
      if (!p && q % 2 == 1 && r * (lq * lq - 1) == 2 * (lq * lq + lq))
        out.push_back({"odd-tree", r, q});
      if (p) {
        long long lp = p;
        long long moved = lp * lp * lp * lp - lp;  // p^4 - p
        long long rhs_tree = lp * lp * lp * lp + lp * lp;
        if (r * moved == 2 * rhs_tree) out.push_back({"square-tree", r, q});
        if (r * moved == 2 * (rhs_tree + 1)) out.push_back({"square-cycle", r, q});
      }
    }
  }
  return out;
}

}  // namespace isodrum
