#pragma once

#include <cstdint>
#include <vector>

#include "isodrum/geometry.h"

namespace isodrum {

// Rasterization of an axis-aligned unfolded domain onto the square lattice
// of step h = d/n_grid, where d is the tile scale (leg of a half-square,
// side of a square tile). Interior nodes are lattice points strictly inside
// the domain; points on the outer boundary, slits included, are excluded.
// Each node records the tile containing it, ties on inter-tile edges going
// to the lowest tile index, together with its base-tile coordinates under
// that tile's placement isometry. The grid keeps one ring of outside cells
// around the bounding box so 5-point stencils need no bounds checks.
struct GridDomain {
  double d = 1;
  double h = 0;
  int n_grid = 0;
  int cols = 0, rows = 0;  // padded grid extents
  double x0 = 0, y0 = 0;   // world position of grid cell (0, 0)

  std::vector<std::uint8_t> inside;  // cols*rows, 1 = interior node
  std::vector<double> mask;          // same flags as doubles, for the kernels
  std::vector<int> node_id;          // cell -> node index, -1 outside
  std::vector<int> cell_of;          // node -> cell
  std::vector<int> tile_of;          // node -> owning tile
  std::vector<Vec2> local_of;        // node -> base-tile coordinates
  std::vector<Isometry> tile_iso;    // placement isometries, copied per tile
  int num_nodes = 0;

  int cell(int i, int j) const { return j * cols + i; }
  Vec2 world(int node) const {
    int c = cell_of[node];
    return {x0 + (c % cols) * h, y0 + (c / cols) * h};
  }
  // Node index at a world point, -1 when the point is not an interior node.
  int node_at(double x, double y) const;
};

// Throws std::invalid_argument when the domain's tile vertices do not all
// sit on the lattice (the finite-difference paths support only axis-aligned
// half-square and rectangle tiles) or when n_grid < 2.
GridDomain rasterize(const PlanarDomain& dom, int n_grid);

// y <- (4 x - x_left - x_right - x_down - x_up) * mask / h^2 over the
// padded grid; the outer ring of y is zeroed. Dispatches once, at first
// use, to the widest kernel the CPU supports; every kernel performs the
// operations in the same order, so results are bitwise identical.
void apply_stencil(const GridDomain& g, const double* x, double* y);
void apply_stencil_scalar(const GridDomain& g, const double* x, double* y);
const char* stencil_kernel_name();

// Compact node vector scattered onto the padded grid (zeros elsewhere) and
// gathered back.
void scatter_nodes(const GridDomain& g, const double* compact, double* padded);
void gather_nodes(const GridDomain& g, const double* padded, double* compact);

}  // namespace isodrum
