#pragma once

#include <array>
#include <string>
#include <vector>

#include "isodrum/adjacency.h"
#include "isodrum/rational.h"

namespace isodrum {

struct Vec2 {
  double x = 0, y = 0;
};

// Orientation-tracking planar isometry p -> A p + t.
struct Isometry {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1, tx = 0, ty = 0;
  Vec2 apply(const Vec2& p) const;
  // -1 for orientation-reversing maps.
  int orientation() const;
  // Inverse map; assumes the linear part is orthogonal, as for all
  // isometries produced here.
  Isometry inverse() const;
};

Isometry reflection_across(const Vec2& a, const Vec2& b);
Isometry compose(const Isometry& f, const Isometry& g);  // f after g

// Triangular building block. Side mu joins the two vertices other than mu,
// so side mu is opposite vertex mu.
struct BaseTile {
  std::array<Vec2, 3> v;

  double angle(int vertex) const;
  double side_length(int mu) const;
  double area() const;

  // Vertex 0 at origin, vertex 1 on the positive x axis at distance `scale`,
  // interior angles a0 at vertex 0 and a1 at vertex 1.
  static BaseTile from_angles(double a0, double a1, double scale = 1.0);
  // Right isosceles triangle: legs of length d meeting at vertex 2, so the
  // hypotenuse is side 2.
  static BaseTile half_square(double d);
};

// One unfolded copy of the base tile. The isometry maps base-tile
// coordinates to the copy's position; sign is its orientation.
struct PlacedTile {
  std::vector<Vec2> v;
  Isometry iso;
  int sign = 1;
};

struct DomainEdge {
  int a = 0, b = 0, color = 0;
  int side = 0;  // polygon side the gluing reflects across, on both tiles
};

// A tile side left unglued; `side` indexes the placed tile's polygon.
struct BoundaryEdge {
  int tile = 0, side = 0;
  Vec2 p, q;
};

struct PlanarDomain {
  std::vector<PlacedTile> tiles;
  std::vector<DomainEdge> interior;
  std::vector<BoundaryEdge> boundary;
  // Largest pairwise tile-interior overlap, relative to the tile area.
  double max_overlap = 0;

  double area() const;
  double perimeter() const;
  // Interior angles along the boundary, one per wedge of tile corners glued
  // around a vertex, straight angles excluded. Wedges are combinatorial, so
  // a pinch point two wedges touch yields two corners, and a slit tip the
  // domain wraps fully around reports 2 pi.
  std::vector<double> corner_angles() const;
  std::string to_json() const;
};

// Reflects copies of the tile along the colored graph, breadth-first from
// root. Side mu of the tile lies across each color-mu edge. Throws
// std::runtime_error("non-planar") when two copies overlap by more than
// 1e-9 of the tile area, and std::runtime_error("loop mismatch") when a
// graph cycle fails to close within 1e-9 on vertex coordinates.
PlanarDomain unfold(const BaseTile& tile, const ColoredGraph& graph,
                    int root = 0);

// Same construction, reporting failures instead of throwing: returns the
// domain with `loop_error` and `max_overlap` filled in for the caller to
// judge. Used to probe whether any tile shape realizes a gluing.
struct UnfoldReport {
  PlanarDomain domain;
  double loop_error = 0;
  bool placed_all = false;
};
UnfoldReport try_unfold(const BaseTile& tile, const ColoredGraph& graph,
                        int root = 0);

// Square-tile variant for the axis-aligned drawings: each copy is a d-by-d
// square, color mu reflects across the square side side_of_color[mu]
// (0 left, 1 bottom, 2 right, 3 top); the leftover side is always boundary.
PlanarDomain unfold_squares(double d, const ColoredGraph& graph,
                            const std::array<int, 3>& side_of_color,
                            int root = 0);

struct WeylData {
  double area = 0;
  double perimeter = 0;
  double corner_constant = 0;  // K = sum (pi/a - a/pi) / 24 over corners
  std::vector<double> angles;
};

WeylData weyl_data(const PlanarDomain& domain);

// Genus of the translation surface from a rational polygon with angles
// pi * angle_over_pi[i]: g = 1 + (n/2) sum (m_i - 1)/n_i, n = lcm of the
// denominators.
int translation_surface_genus(const std::vector<Rat>& angles_over_pi);

// Nearest small-denominator rational to alpha/pi; throws
// std::invalid_argument("irrational angle") when none matches within 1e-9.
Rat angle_over_pi(double alpha, long max_denominator = 1000);

// Whether some base-tile shape unfolds both gluings of a pair into planar
// domains at once. Trees qualify unconditionally (shape-independent); a
// gluing with one cycle pins a tile angle via the cycle's two alternating
// colors, and the remaining shape freedom is scanned for a placement with
// no overlap. Cycles whose color word does not alternate between two
// colors close for no tile (an odd loop reverses orientation; a mixed even
// word leaves a residual glide) and disqualify the pair.
bool pair_realizable(const std::array<Perm, 3>& gens1,
                     const std::array<Perm, 3>& gens2);

// Rigidly moved copy: tile vertices, placement isometries and boundary
// segments are all mapped through g.
PlanarDomain transformed(const PlanarDomain& dom, const Isometry& g);

// Both members of a pair unfolded with the same tile shape and the same
// assignment of gluing colors to tile sides, so the tiles of both domains
// land on one square lattice and a transplantation acts node-for-node.
struct LatticePair {
  PlanarDomain first, second;
  std::array<int, 3> side_of_color{0, 1, 2};
  double d = 1;
  // Which member sits on the published Cartesian frame (framed_pair_7_3
  // only); -1 otherwise.
  int frame_member = -1;
};

// Unfolds both members with half-square tiles of leg d, color mu gluing
// across tile side side_of_color[mu] (0 vertical leg, 1 horizontal leg,
// 2 hypotenuse). Returns nullopt unless both members come out planar.
std::optional<LatticePair> half_square_pair(const std::array<Perm, 3>& gens1,
                                            const std::array<Perm, 3>& gens2,
                                            double d,
                                            const std::array<int, 3>& side_of_color);
// Same, scanning the six side assignments and keeping the first that works.
std::optional<LatticePair> half_square_pair(const std::array<Perm, 3>& gens1,
                                            const std::array<Perm, 3>& gens2,
                                            double d);

// The celebrated seven-tile pair drawn on the Cartesian mode-matching
// frame: one member occupies the published five-region layout (triangles
// filling [0,d]x[2d,3d], [0,d]x[d,2d] and [2d,3d]x[0,d], plus the squares
// [d,2d]^2 and [2d,3d]x[d,2d] each split along a diagonal), and the other
// member is unfolded with the same side assignment and translated so that
// every boundary hypotenuse lies on a line y = x + 2kd or y = -x + 2kd.
// On such a placement the antisymmetrized sine products vanish on the
// whole boundary of both members. Throws std::invalid_argument when the
// pair does not fit the frame.
LatticePair framed_pair_7_3(const std::array<Perm, 3>& gens1,
                            const std::array<Perm, 3>& gens2, double d);

}  // namespace isodrum
