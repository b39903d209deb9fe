#include "isodrum/geometry.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace isodrum {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

double polygon_signed_area(const std::vector<Vec2>& p) {
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p[(i + 1) % p.size()];
    s += cross(a, b);
  }
  return 0.5 * s;
}

// Intersection of two convex polygons by half-plane clipping; both CCW.
double convex_intersection_area(std::vector<Vec2> subject, const std::vector<Vec2>& clip) {
  for (size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
    const Vec2& a = clip[i];
    const Vec2& b = clip[(i + 1) % clip.size()];
    std::vector<Vec2> out;
    out.reserve(subject.size() + 1);
    for (size_t j = 0; j < subject.size(); ++j) {
      const Vec2& p = subject[j];
      const Vec2& q = subject[(j + 1) % subject.size()];
      double sp = cross(b - a, p - a);
      double sq = cross(b - a, q - a);
      if (sp >= 0) out.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        double t = sp / (sp - sq);
        out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    subject = std::move(out);
  }
  if (subject.size() < 3) return 0;
  return std::abs(polygon_signed_area(subject));
}

// Groups nearby points: find-or-add with a coarse hash grid and a 3x3
// neighborhood probe, so matches never straddle a cell edge.
struct PointIndex {
  double cell = 1e-6;
  double tol = 1e-7;
  std::vector<Vec2> pts;
  std::map<std::pair<long long, long long>, std::vector<int>> grid;

  int find(const Vec2& p) const {
    long long cx = (long long)std::floor(p.x / cell);
    long long cy = (long long)std::floor(p.y / cell);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (int id : it->second)
          if (dist(pts[id], p) <= tol) return id;
      }
    return -1;
  }

  int find_or_add(const Vec2& p) {
    int id = find(p);
    if (id >= 0) return id;
    id = (int)pts.size();
    pts.push_back(p);
    long long cx = (long long)std::floor(p.x / cell);
    long long cy = (long long)std::floor(p.y / cell);
    grid[{cx, cy}].push_back(id);
    return id;
  }
};

// Base polygon plus how colors and boundary attach to its sides. side_ends
// lists each side's endpoints in counterclockwise traversal order.
struct PolySpec {
  std::vector<Vec2> verts;
  std::vector<std::pair<int, int>> side_ends;
  std::array<int, 3> side_of_color;
  std::vector<int> always_boundary;
};

PlanarDomain unfold_core(const PolySpec& spec, const ColoredGraph& graph, int root,
                         double& loop_error, bool& placed_all) {
  const int d = graph.d;
  if (root < 0 || root >= d) throw std::invalid_argument("unfold root out of range");
  const int nv = (int)spec.verts.size();

  PlanarDomain dom;
  dom.tiles.resize(d);
  std::vector<char> placed(d, 0);

  std::vector<std::vector<std::pair<int, int>>> adj(d);  // vertex -> (edge idx, other end)
  for (int e = 0; e < (int)graph.edges.size(); ++e) {
    adj[graph.edges[e].a].push_back({e, graph.edges[e].b});
    adj[graph.edges[e].b].push_back({e, graph.edges[e].a});
  }

  dom.tiles[root].v = spec.verts;
  dom.tiles[root].iso = Isometry{};
  dom.tiles[root].sign = 1;
  placed[root] = 1;
  std::vector<char> tree_edge(graph.edges.size(), 0);
  std::queue<int> bfs;
  bfs.push(root);
  int placed_count = 1;
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop();
    for (auto [e, other] : adj[t]) {
      if (placed[other]) continue;
      tree_edge[e] = 1;
      int side = spec.side_of_color[graph.edges[e].color];
      auto [i, j] = spec.side_ends[side];
      Isometry r = reflection_across(dom.tiles[t].v[i], dom.tiles[t].v[j]);
      PlacedTile& child = dom.tiles[other];
      child.v.resize(nv);
      for (int k = 0; k < nv; ++k) child.v[k] = r.apply(dom.tiles[t].v[k]);
      child.iso = compose(r, dom.tiles[t].iso);
      child.sign = -dom.tiles[t].sign;
      placed[other] = 1;
      ++placed_count;
      bfs.push(other);
    }
  }
  placed_all = (placed_count == d);

  // Every edge, tree or not, must map its two placements onto each other.
  loop_error = 0;
  for (const auto& e : graph.edges) {
    if (!placed[e.a] || !placed[e.b]) continue;
    int side = spec.side_of_color[e.color];
    auto [i, j] = spec.side_ends[side];
    Isometry r = reflection_across(dom.tiles[e.a].v[i], dom.tiles[e.a].v[j]);
    for (int k = 0; k < nv; ++k)
      loop_error = std::max(loop_error, dist(r.apply(dom.tiles[e.a].v[k]), dom.tiles[e.b].v[k]));
    dom.interior.push_back({e.a, e.b, e.color, side});
  }

  // Unglued sides: colors fixing the tile, plus sides no color touches.
  for (int t = 0; t < d; ++t) {
    if (!placed[t]) continue;
    std::vector<int> open_sides = spec.always_boundary;
    for (int mu = 0; mu < 3; ++mu)
      if (graph.gens[mu](t) == t) open_sides.push_back(spec.side_of_color[mu]);
    for (int side : open_sides) {
      auto [i, j] = spec.side_ends[side];
      // Order endpoints so the domain interior stays on the left.
      if (dom.tiles[t].sign > 0)
        dom.boundary.push_back({t, side, dom.tiles[t].v[i], dom.tiles[t].v[j]});
      else
        dom.boundary.push_back({t, side, dom.tiles[t].v[j], dom.tiles[t].v[i]});
    }
  }

  // Pairwise interior overlap, relative to the tile area.
  double tile_area = std::abs(polygon_signed_area(spec.verts));
  std::vector<std::vector<Vec2>> ccw(d);
  std::vector<std::array<double, 4>> bbox(d);  // xmin xmax ymin ymax
  for (int t = 0; t < d; ++t) {
    if (!placed[t]) continue;
    ccw[t] = dom.tiles[t].v;
    if (polygon_signed_area(ccw[t]) < 0) std::reverse(ccw[t].begin(), ccw[t].end());
    bbox[t] = {ccw[t][0].x, ccw[t][0].x, ccw[t][0].y, ccw[t][0].y};
    for (const Vec2& p : ccw[t]) {
      bbox[t][0] = std::min(bbox[t][0], p.x);
      bbox[t][1] = std::max(bbox[t][1], p.x);
      bbox[t][2] = std::min(bbox[t][2], p.y);
      bbox[t][3] = std::max(bbox[t][3], p.y);
    }
  }
  dom.max_overlap = 0;
  for (int s = 0; s < d; ++s) {
    if (!placed[s]) continue;
    for (int t = s + 1; t < d; ++t) {
      if (!placed[t]) continue;
      if (bbox[s][1] < bbox[t][0] || bbox[t][1] < bbox[s][0] || bbox[s][3] < bbox[t][2] ||
          bbox[t][3] < bbox[s][2])
        continue;
      double inter = convex_intersection_area(ccw[s], ccw[t]);
      dom.max_overlap = std::max(dom.max_overlap, inter / tile_area);
    }
  }
  return dom;
}

PolySpec triangle_spec(const BaseTile& tile) {
  PolySpec spec;
  spec.verts = {tile.v[0], tile.v[1], tile.v[2]};
  spec.side_ends = {{1, 2}, {2, 0}, {0, 1}};
  spec.side_of_color = {0, 1, 2};
  return spec;
}

}  // namespace

Vec2 Isometry::apply(const Vec2& p) const {
  return {a11 * p.x + a12 * p.y + tx, a21 * p.x + a22 * p.y + ty};
}

int Isometry::orientation() const { return (a11 * a22 - a12 * a21) < 0 ? -1 : 1; }

Isometry Isometry::inverse() const {
  Isometry inv;
  inv.a11 = a11;
  inv.a12 = a21;
  inv.a21 = a12;
  inv.a22 = a22;
  inv.tx = -(inv.a11 * tx + inv.a12 * ty);
  inv.ty = -(inv.a21 * tx + inv.a22 * ty);
  return inv;
}

Isometry reflection_across(const Vec2& a, const Vec2& b) {
  double ux = b.x - a.x, uy = b.y - a.y;
  double len = std::hypot(ux, uy);
  if (len == 0) throw std::invalid_argument("reflection axis endpoints coincide");
  ux /= len;
  uy /= len;
  Isometry r;
  r.a11 = ux * ux - uy * uy;
  r.a12 = 2 * ux * uy;
  r.a21 = 2 * ux * uy;
  r.a22 = uy * uy - ux * ux;
  r.tx = a.x - (r.a11 * a.x + r.a12 * a.y);
  r.ty = a.y - (r.a21 * a.x + r.a22 * a.y);
  return r;
}

Isometry compose(const Isometry& f, const Isometry& g) {
  Isometry h;
  h.a11 = f.a11 * g.a11 + f.a12 * g.a21;
  h.a12 = f.a11 * g.a12 + f.a12 * g.a22;
  h.a21 = f.a21 * g.a11 + f.a22 * g.a21;
  h.a22 = f.a21 * g.a12 + f.a22 * g.a22;
  h.tx = f.a11 * g.tx + f.a12 * g.ty + f.tx;
  h.ty = f.a21 * g.tx + f.a22 * g.ty + f.ty;
  return h;
}

double BaseTile::angle(int vertex) const {
  const Vec2& o = v[vertex];
  Vec2 u = v[(vertex + 1) % 3] - o;
  Vec2 w = v[(vertex + 2) % 3] - o;
  return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

double BaseTile::side_length(int mu) const { return dist(v[(mu + 1) % 3], v[(mu + 2) % 3]); }

double BaseTile::area() const {
  return std::abs(0.5 * cross(v[1] - v[0], v[2] - v[0]));
}

BaseTile BaseTile::from_angles(double a0, double a1, double scale) {
  double a2 = kPi - a0 - a1;
  if (!(a0 > 0) || !(a1 > 0) || !(a2 > 0) || !(scale > 0))
    throw std::invalid_argument("degenerate triangle angles");
  double b = scale * std::sin(a1) / std::sin(a2);  // length of side from vertex 0 to vertex 2
  BaseTile t;
  t.v[0] = {0, 0};
  t.v[1] = {scale, 0};
  t.v[2] = {b * std::cos(a0), b * std::sin(a0)};
  return t;
}

BaseTile BaseTile::half_square(double d) {
  if (!(d > 0)) throw std::invalid_argument("degenerate triangle angles");
  BaseTile t;
  t.v[0] = {d, 0};
  t.v[1] = {0, d};
  t.v[2] = {0, 0};
  return t;
}

double PlanarDomain::area() const {
  double s = 0;
  for (const PlacedTile& t : tiles)
    if (!t.v.empty()) s += std::abs(polygon_signed_area(t.v));
  return s;
}

double PlanarDomain::perimeter() const {
  double s = 0;
  for (const BoundaryEdge& e : boundary) s += dist(e.p, e.q);
  return s;
}

namespace {

// Endpoints of polygon side s in counterclockwise order; nv picks the
// convention (triangles: side s is opposite vertex s).
std::pair<int, int> side_endpoints(int nv, int s) {
  if (nv == 3) return {(s + 1) % 3, (s + 2) % 3};
  static const std::pair<int, int> square[4] = {{3, 0}, {0, 1}, {1, 2}, {2, 3}};
  return square[s];
}

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<double> PlanarDomain::corner_angles() const {
  // Reflections keep vertex labels, so corner (t, k) of a tile glued across
  // a side with endpoint k meets corner (partner, k). Components of that
  // relation are the fans of tile corners around each vertex; a fan with
  // unglued sides on it is one boundary wedge.
  int d = (int)tiles.size();
  int nv = 0;
  for (const PlacedTile& t : tiles) nv = std::max(nv, (int)t.v.size());
  if (nv == 0) return {};
  std::vector<int> parent(d * nv);
  for (int i = 0; i < d * nv; ++i) parent[i] = i;
  for (const DomainEdge& e : interior) {
    auto [i, j] = side_endpoints(nv, e.side);
    for (int k : {i, j})
      parent[uf_find(parent, e.a * nv + k)] = uf_find(parent, e.b * nv + k);
  }
  std::vector<int> boundary_rays(d * nv, 0);
  for (const BoundaryEdge& e : boundary) {
    auto [i, j] = side_endpoints(nv, e.side);
    ++boundary_rays[e.tile * nv + i];
    ++boundary_rays[e.tile * nv + j];
  }
  std::vector<double> fan_angle(d * nv, 0);
  std::vector<int> fan_rays(d * nv, 0);
  std::vector<char> fan_used(d * nv, 0);
  for (int t = 0; t < d; ++t) {
    if (tiles[t].v.empty()) continue;
    for (int k = 0; k < nv; ++k) {
      Vec2 u = tiles[t].v[(k + nv - 1) % nv] - tiles[t].v[k];
      Vec2 w = tiles[t].v[(k + 1) % nv] - tiles[t].v[k];
      int root = uf_find(parent, t * nv + k);
      fan_angle[root] += std::atan2(std::abs(cross(u, w)), dot(u, w));
      fan_rays[root] += boundary_rays[t * nv + k];
      fan_used[root] = 1;
    }
  }
  std::vector<double> corners;
  for (int id = 0; id < d * nv; ++id) {
    if (!fan_used[id] || uf_find(parent, id) != id) continue;
    if (fan_rays[id] == 0) continue;  // vertex fully surrounded by tiles
    double a = fan_angle[id];
    if (std::abs(a - kPi) <= 1e-9) continue;  // straight
    corners.push_back(a);
  }
  std::sort(corners.begin(), corners.end());
  return corners;
}

std::string PlanarDomain::to_json() const {
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "{\n  \"tiles\": [";
  bool first_tile = true;
  for (const PlacedTile& t : tiles) {
    out << (first_tile ? "" : ",") << "\n    [";
    first_tile = false;
    for (size_t k = 0; k < t.v.size(); ++k)
      out << (k ? ", " : "") << "[" << num(t.v[k].x) << ", " << num(t.v[k].y) << "]";
    out << "]";
  }
  out << "\n  ],\n  \"edges\": [";
  for (size_t e = 0; e < interior.size(); ++e)
    out << (e ? "," : "") << "\n    {\"a\": " << interior[e].a << ", \"b\": " << interior[e].b
        << ", \"color\": " << interior[e].color << "}";
  out << "\n  ],\n  \"boundary\": ";

  // Chain oriented boundary edges into closed loops; at a pinch vertex take
  // the most clockwise continuation so the walk never crosses itself.
  PointIndex index;
  struct OEdge {
    int from, to;
    Vec2 p, q;
    bool used = false;
  };
  std::vector<OEdge> oes;
  for (const BoundaryEdge& e : boundary) {
    OEdge oe;
    oe.p = e.p;
    oe.q = e.q;
    oe.from = index.find_or_add(e.p);
    oe.to = index.find_or_add(e.q);
    oes.push_back(oe);
  }
  std::vector<std::vector<int>> out_edges(index.pts.size());
  for (int i = 0; i < (int)oes.size(); ++i) out_edges[oes[i].from].push_back(i);
  std::vector<std::vector<Vec2>> loops;
  for (int start = 0; start < (int)oes.size(); ++start) {
    if (oes[start].used) continue;
    std::vector<Vec2> loop;
    int cur = start;
    while (!oes[cur].used) {
      oes[cur].used = true;
      loop.push_back(oes[cur].p);
      Vec2 din = oes[cur].q - oes[cur].p;
      int next = -1;
      double best = 0;
      for (int cand : out_edges[oes[cur].to]) {
        if (oes[cand].used) continue;
        Vec2 dout = oes[cand].q - oes[cand].p;
        double turn = std::atan2(cross(din, dout), dot(din, dout));
        if (next < 0 || turn < best) {
          next = cand;
          best = turn;
        }
      }
      if (next < 0) break;
      cur = next;
    }
    loops.push_back(std::move(loop));
  }
  auto emit_loop = [&](const std::vector<Vec2>& loop) {
    out << "[";
    for (size_t k = 0; k < loop.size(); ++k)
      out << (k ? ", " : "") << "[" << num(loop[k].x) << ", " << num(loop[k].y) << "]";
    out << "]";
  };
  if (loops.size() == 1) {
    emit_loop(loops[0]);
  } else {
    out << "[";
    for (size_t l = 0; l < loops.size(); ++l) {
      if (l) out << ", ";
      emit_loop(loops[l]);
    }
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

PlanarDomain unfold(const BaseTile& tile, const ColoredGraph& graph, int root) {
  if (!graph.connected) throw std::invalid_argument("graph not connected");
  double loop_error = 0;
  bool placed_all = false;
  PlanarDomain dom = unfold_core(triangle_spec(tile), graph, root, loop_error, placed_all);
  if (loop_error > 1e-9) throw std::runtime_error("loop mismatch");
  if (dom.max_overlap > 1e-9) throw std::runtime_error("non-planar");
  return dom;
}

UnfoldReport try_unfold(const BaseTile& tile, const ColoredGraph& graph, int root) {
  UnfoldReport rep;
  rep.domain = unfold_core(triangle_spec(tile), graph, root, rep.loop_error, rep.placed_all);
  return rep;
}

PlanarDomain unfold_squares(double d, const ColoredGraph& graph,
                            const std::array<int, 3>& side_of_color, int root) {
  if (!(d > 0)) throw std::invalid_argument("degenerate square side");
  if (!graph.connected) throw std::invalid_argument("graph not connected");
  std::array<char, 4> used{0, 0, 0, 0};
  for (int mu = 0; mu < 3; ++mu) {
    int s = side_of_color[mu];
    if (s < 0 || s >= 4 || used[s]) throw std::invalid_argument("invalid square side assignment");
    used[s] = 1;
  }
  PolySpec spec;
  spec.verts = {{0, 0}, {d, 0}, {d, d}, {0, d}};
  // 0 left, 1 bottom, 2 right, 3 top, endpoints in counterclockwise order.
  spec.side_ends = {{3, 0}, {0, 1}, {1, 2}, {2, 3}};
  spec.side_of_color = side_of_color;
  for (int s = 0; s < 4; ++s)
    if (!used[s]) spec.always_boundary.push_back(s);
  double loop_error = 0;
  bool placed_all = false;
  PlanarDomain dom = unfold_core(spec, graph, root, loop_error, placed_all);
  if (loop_error > 1e-9) throw std::runtime_error("loop mismatch");
  if (dom.max_overlap > 1e-9) throw std::runtime_error("non-planar");
  return dom;
}

WeylData weyl_data(const PlanarDomain& domain) {
  WeylData w;
  w.area = domain.area();
  w.perimeter = domain.perimeter();
  w.angles = domain.corner_angles();
  for (double a : w.angles) w.corner_constant += (kPi / a - a / kPi) / 24.0;
  return w;
}

int translation_surface_genus(const std::vector<Rat>& angles_over_pi) {
  if (angles_over_pi.empty()) throw std::invalid_argument("no angles");
  int64_t n = 1;
  for (const Rat& a : angles_over_pi) {
    if (a.num() <= 0) throw std::invalid_argument("angles must be positive");
    n = std::lcm(n, a.den());
  }
  Rat sum(0);
  for (const Rat& a : angles_over_pi) sum += Rat(a.num() - 1, a.den());
  Rat g = Rat(1) + Rat(n, 2) * sum;
  if (!g.is_integer()) throw std::invalid_argument("genus not integral");
  return (int)g.num();
}

Rat angle_over_pi(double alpha, long max_denominator) {
  double x = alpha / kPi;
  double t = x;
  int64_t pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  for (int it = 0; it < 64; ++it) {
    if (!(std::abs(t) < 1e15)) break;
    double fa = std::floor(t);
    int64_t a = (int64_t)fa;
    int64_t p = a * pm1 + pm2;
    int64_t q = a * qm1 + qm2;
    if (q > max_denominator) break;
    if (q > 0 && std::abs(x - (double)p / (double)q) <= 1e-9) return Rat(p, q);
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
    double r = t - fa;
    if (r < 1e-15) break;
    t = 1.0 / r;
  }
  throw std::invalid_argument("irrational angle");
}

namespace {

// Cycle data of a connected one-cycle gluing: the cycle's color word, if it
// strictly alternates two colors mu, nu over even length L, pins the tile
// angle at the vertex both sides touch (the vertex opposite neither side)
// to 2 pi / L. Any other word closes for no tile.
struct CyclePinScan {
  bool disqualified = false;
  bool has_pin = false;
  int vertex = 0;
  double angle = 0;
};

CyclePinScan scan_cycle(const ColoredGraph& g) {
  CyclePinScan result;
  int rank = (int)g.edges.size() - g.d + 1;
  if (rank == 0) return result;
  if (rank != 1) {
    result.disqualified = true;
    return result;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(g.d);
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    adj[g.edges[e].a].push_back({e, g.edges[e].b});
    adj[g.edges[e].b].push_back({e, g.edges[e].a});
  }
  std::vector<int> deg(g.d);
  std::vector<char> removed(g.edges.size(), 0);
  for (int t = 0; t < g.d; ++t) deg[t] = (int)adj[t].size();
  std::queue<int> leaves;
  for (int t = 0; t < g.d; ++t)
    if (deg[t] == 1) leaves.push(t);
  while (!leaves.empty()) {
    int t = leaves.front();
    leaves.pop();
    for (auto [e, other] : adj[t]) {
      if (removed[e]) continue;
      removed[e] = 1;
      --deg[t];
      --deg[other];
      if (deg[other] == 1) leaves.push(other);
      break;
    }
  }
  int start = -1;
  for (int t = 0; t < g.d; ++t)
    if (deg[t] == 2) start = t;
  if (start < 0) {
    result.disqualified = true;
    return result;
  }
  std::vector<int> word;
  int cur = start, prev_edge = -1;
  do {
    int next_edge = -1, next_vertex = -1;
    for (auto [e, other] : adj[cur]) {
      if (removed[e] || e == prev_edge) continue;
      next_edge = e;
      next_vertex = other;
      break;
    }
    if (next_edge < 0) {
      result.disqualified = true;
      return result;
    }
    word.push_back(g.edges[next_edge].color);
    prev_edge = next_edge;
    cur = next_vertex;
  } while (cur != start);

  int L = (int)word.size();
  std::array<char, 3> seen{0, 0, 0};
  for (int c : word) seen[c] = 1;
  int distinct = seen[0] + seen[1] + seen[2];
  bool alternating = (L % 2 == 0) && distinct == 2;
  for (int i = 0; i < L && alternating; ++i)
    if (word[i] == word[(i + 1) % L]) alternating = false;
  if (!alternating) {
    result.disqualified = true;
    return result;
  }
  int mu = -1, nu = -1;
  for (int c = 0; c < 3; ++c)
    if (seen[c]) (mu < 0 ? mu : nu) = c;
  result.has_pin = true;
  result.vertex = 3 - mu - nu;  // side c is opposite vertex c
  result.angle = 2 * kPi / L;
  return result;
}

bool shape_unfolds_both(const BaseTile& tile, const ColoredGraph& g1, const ColoredGraph& g2) {
  for (const ColoredGraph* g : {&g1, &g2}) {
    UnfoldReport rep = try_unfold(tile, *g);
    if (!rep.placed_all || rep.loop_error > 1e-9 || rep.domain.max_overlap > 1e-9) return false;
  }
  return true;
}

}  // namespace

bool pair_realizable(const std::array<Perm, 3>& gens1, const std::array<Perm, 3>& gens2) {
  ColoredGraph g1 = involution_graph(gens1);
  ColoredGraph g2 = involution_graph(gens2);
  if (!g1.connected || !g2.connected) return false;
  CyclePinScan s1 = scan_cycle(g1);
  CyclePinScan s2 = scan_cycle(g2);
  if (s1.disqualified || s2.disqualified) return false;
  if (!s1.has_pin && !s2.has_pin) return true;  // trees: every shape works

  std::array<double, 3> pinned{0, 0, 0};
  for (const CyclePinScan* s : {&s1, &s2}) {
    if (!s->has_pin) continue;
    if (pinned[s->vertex] != 0 && std::abs(pinned[s->vertex] - s->angle) > 1e-12)
      return false;  // both cycles pin the same vertex to different angles
    pinned[s->vertex] = s->angle;
  }
  std::vector<int> pin_idx, free_idx;
  for (int k = 0; k < 3; ++k) (pinned[k] != 0 ? pin_idx : free_idx).push_back(k);
  double pin_total = 0;
  for (int k : pin_idx) pin_total += pinned[k];
  if (pin_total >= kPi - 1e-9) return false;

  if (pin_idx.size() == 2) {
    std::array<double, 3> ang = pinned;
    ang[free_idx[0]] = kPi - pin_total;
    return shape_unfolds_both(BaseTile::from_angles(ang[0], ang[1]), g1, g2);
  }
  // One pinned angle: scan the remaining shape freedom. The grid offsets are
  // odd multiples of 1/192, which never land on the isolated degenerate
  // shapes (simple fractions of the range) where distinct copies touch.
  double range = kPi - pin_total;
  for (int j = 0; j < 96; ++j) {
    double beta = range * (2 * j + 1) / 192.0;
    std::array<double, 3> ang{};
    ang[pin_idx[0]] = pin_total;
    ang[(pin_idx[0] + 1) % 3] = beta;
    ang[(pin_idx[0] + 2) % 3] = range - beta;
    if (shape_unfolds_both(BaseTile::from_angles(ang[0], ang[1]), g1, g2)) return true;
  }
  return false;
}

PlanarDomain transformed(const PlanarDomain& dom, const Isometry& g) {
  PlanarDomain out = dom;
  for (PlacedTile& t : out.tiles) {
    for (Vec2& p : t.v) p = g.apply(p);
    t.iso = compose(g, t.iso);
    t.sign *= g.orientation();
  }
  for (BoundaryEdge& e : out.boundary) {
    e.p = g.apply(e.p);
    e.q = g.apply(e.q);
  }
  return out;
}

namespace {

// Color mu reassigned to tile side side_of_color[mu].
std::array<Perm, 3> side_assigned(const std::array<Perm, 3>& gens,
                                  const std::array<int, 3>& side_of_color) {
  std::array<char, 3> used{0, 0, 0};
  for (int c = 0; c < 3; ++c) {
    int s = side_of_color[c];
    if (s < 0 || s >= 3 || used[s]) throw std::invalid_argument("invalid side assignment");
    used[s] = 1;
  }
  std::array<Perm, 3> out{};
  for (int c = 0; c < 3; ++c) out[side_of_color[c]] = gens[c];
  return out;
}

bool planar_report(const UnfoldReport& rep) {
  return rep.placed_all && rep.loop_error <= 1e-9 && rep.domain.max_overlap <= 1e-9;
}

using Triple = std::array<Vec2, 3>;

// Isometry carrying the ordered points (p0,p1,p2) onto (q0,q1,q2); valid
// whenever the correspondence is rigid, which the caller guarantees.
Isometry from_correspondence(const Triple& p, const Triple& q) {
  double b11 = p[0].x - p[2].x, b12 = p[1].x - p[2].x;
  double b21 = p[0].y - p[2].y, b22 = p[1].y - p[2].y;
  double det = b11 * b22 - b12 * b21;
  double c11 = q[0].x - q[2].x, c12 = q[1].x - q[2].x;
  double c21 = q[0].y - q[2].y, c22 = q[1].y - q[2].y;
  Isometry g;
  g.a11 = (c11 * b22 - c12 * b21) / det;
  g.a12 = (c12 * b11 - c11 * b12) / det;
  g.a21 = (c21 * b22 - c22 * b21) / det;
  g.a22 = (c22 * b11 - c21 * b12) / det;
  g.tx = q[2].x - (g.a11 * p[2].x + g.a12 * p[2].y);
  g.ty = q[2].y - (g.a21 * p[2].x + g.a22 * p[2].y);
  return g;
}

bool same_point_set(const std::vector<Vec2>& a, const Triple& b, double tol) {
  if (a.size() != 3) return false;
  std::array<char, 3> used{0, 0, 0};
  for (const Vec2& p : a) {
    bool hit = false;
    for (int k = 0; k < 3 && !hit; ++k) {
      if (!used[k] && dist(p, b[k]) <= tol) {
        used[k] = 1;
        hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Matches the unfolded member onto the list of frame triangles, trying the
// isometries that carry tile 0 onto each target; returns the mapping that
// sends every tile onto a distinct frame triangle, if one exists.
std::optional<Isometry> match_frame(const PlanarDomain& dom,
                                    const std::vector<Triple>& frame, double tol) {
  if (dom.tiles.size() != frame.size()) return std::nullopt;
  const PlacedTile& t0 = dom.tiles[0];
  Triple p{t0.v[0], t0.v[1], t0.v[2]};
  for (const Triple& target : frame) {
    // The right-angle corner of the target must receive vertex 2.
    int right = -1;
    for (int k = 0; k < 3; ++k) {
      Vec2 u{target[(k + 1) % 3].x - target[k].x, target[(k + 1) % 3].y - target[k].y};
      Vec2 w{target[(k + 2) % 3].x - target[k].x, target[(k + 2) % 3].y - target[k].y};
      if (std::abs(u.x * w.x + u.y * w.y) <= tol) right = k;
    }
    if (right < 0) continue;
    for (int swap = 0; swap < 2; ++swap) {
      Triple q{target[(right + 1 + swap) % 3], target[(right + 2 - swap) % 3], target[right]};
      Isometry g = from_correspondence(p, q);
      std::vector<char> taken(frame.size(), 0);
      bool ok = true;
      for (const PlacedTile& t : dom.tiles) {
        std::vector<Vec2> mapped;
        for (const Vec2& v : t.v) mapped.push_back(g.apply(v));
        bool hit = false;
        for (size_t f = 0; f < frame.size() && !hit; ++f) {
          if (!taken[f] && same_point_set(mapped, frame[f], tol)) {
            taken[f] = 1;
            hit = true;
          }
        }
        if (!hit) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
  }
  return std::nullopt;
}

// Parity of k for the boundary hypotenuses y = +-x + k d: 0 all even,
// 1 all odd, -1 none; mixed parities cannot occur for a lattice unfolding
// of one connected tree, and throw.
int hypotenuse_parity(const PlanarDomain& dom, double d) {
  int parity = -1;
  for (const BoundaryEdge& e : dom.boundary) {
    double dx = e.q.x - e.p.x, dy = e.q.y - e.p.y;
    if (std::abs(std::abs(dx) - std::abs(dy)) > 1e-9 * d) continue;  // not diagonal
    double c = (dx * dy > 0) ? e.p.y - e.p.x : e.p.y + e.p.x;
    long k = std::lround(c / d);
    if (std::abs(c / d - k) > 1e-6) throw std::runtime_error("hypotenuse off the lattice");
    int par = static_cast<int>(((k % 2) + 2) % 2);
    if (parity < 0) parity = par;
    if (parity != par) throw std::runtime_error("mixed hypotenuse parities");
  }
  return parity;
}

}  // namespace

std::optional<LatticePair> half_square_pair(const std::array<Perm, 3>& gens1,
                                            const std::array<Perm, 3>& gens2, double d,
                                            const std::array<int, 3>& side_of_color) {
  BaseTile tile = BaseTile::half_square(d);
  UnfoldReport r1 = try_unfold(tile, involution_graph(side_assigned(gens1, side_of_color)));
  if (!planar_report(r1)) return std::nullopt;
  UnfoldReport r2 = try_unfold(tile, involution_graph(side_assigned(gens2, side_of_color)));
  if (!planar_report(r2)) return std::nullopt;
  LatticePair pair;
  pair.first = std::move(r1.domain);
  pair.second = std::move(r2.domain);
  pair.side_of_color = side_of_color;
  pair.d = d;
  return pair;
}

std::optional<LatticePair> half_square_pair(const std::array<Perm, 3>& gens1,
                                            const std::array<Perm, 3>& gens2, double d) {
  std::array<int, 3> sides{0, 1, 2};
  std::sort(sides.begin(), sides.end());
  do {
    if (auto pair = half_square_pair(gens1, gens2, d, sides)) return pair;
  } while (std::next_permutation(sides.begin(), sides.end()));
  return std::nullopt;
}

LatticePair framed_pair_7_3(const std::array<Perm, 3>& gens1,
                            const std::array<Perm, 3>& gens2, double d) {
  auto at = [d](double x, double y) { return Vec2{x * d, y * d}; };
  Triple a{at(0, 2), at(1, 2), at(1, 3)};
  Triple b{at(0, 2), at(1, 2), at(1, 1)};
  Triple e{at(2, 0), at(2, 1), at(3, 1)};
  std::array<std::array<Triple, 2>, 2> c_split{{
      {Triple{at(1, 1), at(1, 2), at(2, 2)}, Triple{at(1, 1), at(2, 1), at(2, 2)}},
      {Triple{at(1, 1), at(2, 1), at(1, 2)}, Triple{at(2, 1), at(2, 2), at(1, 2)}},
  }};
  std::array<std::array<Triple, 2>, 2> d_split{{
      {Triple{at(2, 1), at(3, 1), at(2, 2)}, Triple{at(3, 1), at(3, 2), at(2, 2)}},
      {Triple{at(2, 1), at(3, 1), at(3, 2)}, Triple{at(2, 1), at(3, 2), at(2, 2)}},
  }};
  std::vector<std::vector<Triple>> variants;
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      variants.push_back({a, b, c_split[ci][0], c_split[ci][1], d_split[di][0], d_split[di][1], e});

  const std::array<Perm, 3>* members[2] = {&gens1, &gens2};
  BaseTile tile = BaseTile::half_square(d);
  for (int m = 0; m < 2; ++m) {
    std::array<int, 3> sides{0, 1, 2};
    std::sort(sides.begin(), sides.end());
    do {
      UnfoldReport rep = try_unfold(tile, involution_graph(side_assigned(*members[m], sides)));
      if (!planar_report(rep)) continue;
      for (const std::vector<Triple>& frame : variants) {
        auto g = match_frame(rep.domain, frame, 1e-9 * d);
        if (!g) continue;
        UnfoldReport other =
            try_unfold(tile, involution_graph(side_assigned(*members[1 - m], sides)));
        if (!planar_report(other)) continue;
        PlanarDomain placed_other = other.domain;
        if (hypotenuse_parity(placed_other, d) == 1) {
          Isometry shift;
          shift.tx = d;
          placed_other = transformed(placed_other, shift);
        }
        LatticePair pair;
        PlanarDomain framed = transformed(rep.domain, *g);
        if (m == 0) {
          pair.first = std::move(framed);
          pair.second = std::move(placed_other);
        } else {
          pair.first = std::move(placed_other);
          pair.second = std::move(framed);
        }
        pair.side_of_color = sides;
        pair.d = d;
        pair.frame_member = m;
        return pair;
      }
    } while (std::next_permutation(sides.begin(), sides.end()));
  }
  throw std::invalid_argument("pair does not fit the mode-matching frame");
}

}  // namespace isodrum
