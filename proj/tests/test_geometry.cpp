#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "isodrum/adjacency.h"
#include "isodrum/geometry.h"
#include "isodrum/pairspec.h"

using namespace isodrum;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Multiset comparison of angle lists with an absolute tolerance.
bool angles_match(std::vector<double> got, std::vector<double> want, double tol = 1e-9) {
  if (got.size() != want.size()) return false;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - want[i]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("reflections and composition") {
  Vec2 a{0.3, -1.2}, b{2.1, 0.7};
  Isometry r = reflection_across(a, b);
  CHECK(r.orientation() == -1);
  // Axis points are fixed, double reflection is the identity.
  CHECK(std::abs(r.apply(a).x - a.x) < 1e-12);
  CHECK(std::abs(r.apply(a).y - a.y) < 1e-12);
  CHECK(std::abs(r.apply(b).x - b.x) < 1e-12);
  Isometry rr = compose(r, r);
  CHECK(rr.orientation() == 1);
  for (Vec2 p : {Vec2{0, 0}, Vec2{5, -3}, Vec2{0.1, 9}}) {
    Vec2 q = rr.apply(p);
    CHECK(std::abs(q.x - p.x) < 1e-12);
    CHECK(std::abs(q.y - p.y) < 1e-12);
  }
  CHECK_THROWS_AS(reflection_across(a, a), std::invalid_argument);
}

TEST_CASE("base tiles") {
  BaseTile t = BaseTile::from_angles(0.7, 1.1, 2.0);
  CHECK(std::abs(t.angle(0) - 0.7) < 1e-12);
  CHECK(std::abs(t.angle(1) - 1.1) < 1e-12);
  CHECK(std::abs(t.angle(2) - (kPi - 1.8)) < 1e-12);
  CHECK(std::abs(t.side_length(2) - 2.0) < 1e-12);  // side 2 joins vertices 0 and 1
  CHECK_THROWS_AS(BaseTile::from_angles(1.6, kPi - 1.6), std::invalid_argument);

  BaseTile hs = BaseTile::half_square(2.0);
  CHECK(std::abs(hs.area() - 2.0) < 1e-12);
  CHECK(std::abs(hs.angle(2) - kPi / 2) < 1e-12);
  CHECK(std::abs(hs.side_length(0) - 2.0) < 1e-12);
  CHECK(std::abs(hs.side_length(2) - 2.0 * std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("single tile unfolds to itself") {
  std::array<Perm, 3> gens = {Perm::identity(1), Perm::identity(1), Perm::identity(1)};
  BaseTile t = BaseTile::from_angles(0.6, 0.9);
  PlanarDomain dom = unfold(t, involution_graph(gens));
  CHECK(dom.tiles.size() == 1);
  CHECK(dom.interior.empty());
  CHECK(dom.boundary.size() == 3);
  CHECK(std::abs(dom.area() - t.area()) < 1e-12);
  double perim = t.side_length(0) + t.side_length(1) + t.side_length(2);
  CHECK(std::abs(dom.perimeter() - perim) < 1e-12);
  CHECK(angles_match(dom.corner_angles(), {0.6, 0.9, kPi - 1.5}));
}

TEST_CASE("celebrated pair from half squares") {
  const PairSpec& p = catalog_pair("7_3");
  BaseTile hs = BaseTile::half_square(1.0);
  std::vector<WeylData> weyl;
  for (const auto& gens : {p.gens_points(), p.gens_hyper()}) {
    ColoredGraph g = involution_graph(gens);
    PlanarDomain dom = unfold(hs, g);
    CHECK(dom.tiles.size() == 7);
    CHECK(dom.interior.size() == 6);  // tree on seven tiles
    CHECK(dom.boundary.size() == 9);  // 21 sides, 12 glued
    CHECK(dom.max_overlap < 1e-12);

    // Orientation alternates with unfolding depth and matches the isometry.
    for (const PlacedTile& tile : dom.tiles) {
      CHECK(tile.iso.orientation() == tile.sign);
      double sa = 0;
      for (size_t k = 0; k < tile.v.size(); ++k) {
        const Vec2& u = tile.v[k];
        const Vec2& w = tile.v[(k + 1) % tile.v.size()];
        sa += u.x * w.y - u.y * w.x;
      }
      CHECK(sa * tile.sign > 0);
    }

    WeylData w = weyl_data(dom);
    CHECK(std::abs(w.area - 3.5) < 1e-12);
    CHECK(std::abs(w.perimeter - (6 + 3 * std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(w.corner_constant - 5.0 / 12.0) < 1e-12);
    CHECK(angles_match(w.angles, {kPi / 4, kPi / 4, kPi / 2, kPi / 2, 3 * kPi / 4, 3 * kPi / 4,
                                  3 * kPi / 2, 3 * kPi / 2}));
    weyl.push_back(w);
  }
  CHECK(std::abs(weyl[0].corner_constant - weyl[1].corner_constant) < 1e-12);
}

TEST_CASE("breadth-first root changes placement but not shape data") {
  const PairSpec& p = catalog_pair("7_3");
  ColoredGraph g = involution_graph(p.gens_points());
  BaseTile hs = BaseTile::half_square(1.0);
  for (int root : {1, 4, 6}) {
    PlanarDomain dom = unfold(hs, g, root);
    WeylData w = weyl_data(dom);
    CHECK(std::abs(w.area - 3.5) < 1e-12);
    CHECK(std::abs(w.corner_constant - 5.0 / 12.0) < 1e-12);
  }
  CHECK_THROWS_AS(unfold(hs, g, 7), std::invalid_argument);
}

TEST_CASE("weyl invariants agree across members for generic planar shapes") {
  // Scan a few tile shapes; whenever both members unfold without overlap,
  // the area, perimeter and corner constant must agree.
  int compared = 0;
  for (const char* name : {"7_1", "7_2", "13_1", "15_1"}) {
    const PairSpec& p = catalog_pair(name);
    ColoredGraph g1 = involution_graph(p.gens_points());
    ColoredGraph g2 = involution_graph(p.gens_hyper());
    for (double a0 : {0.9, 1.1}) {
      for (double a1 : {0.8, 1.0}) {
        BaseTile t = BaseTile::from_angles(a0, a1);
        UnfoldReport r1 = try_unfold(t, g1);
        UnfoldReport r2 = try_unfold(t, g2);
        if (r1.domain.max_overlap > 1e-9 || r2.domain.max_overlap > 1e-9) continue;
        WeylData w1 = weyl_data(r1.domain);
        WeylData w2 = weyl_data(r2.domain);
        CHECK(std::abs(w1.area - w2.area) < 1e-9);
        CHECK(std::abs(w1.perimeter - w2.perimeter) < 1e-9);
        CHECK(std::abs(w1.corner_constant - w2.corner_constant) < 1e-9);
        ++compared;
      }
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("obstructed gluings raise the documented errors") {
  // These two catalog trees force copies onto each other for generic tiles.
  for (const char* name : {"13_6", "15_2"}) {
    const PairSpec& p = catalog_pair(name);
    bool overlapped = false;
    for (const auto& gens : {p.gens_points(), p.gens_hyper()}) {
      ColoredGraph g = involution_graph(gens);
      BaseTile t = BaseTile::from_angles(0.83, 1.02);
      UnfoldReport rep = try_unfold(t, g);
      if (rep.domain.max_overlap > 1e-9) {
        overlapped = true;
        CHECK_THROWS_WITH_AS(unfold(t, g), "non-planar", std::runtime_error);
      }
    }
    CHECK(overlapped);
  }

  // A one-cycle gluing with the wrong tile angle fails to close.
  const PairSpec& big = catalog_pair("21_1");
  ColoredGraph g = involution_graph(big.gens_points());
  CHECK(g.cycle_rank == 1);
  BaseTile bad = BaseTile::from_angles(0.7, 0.8);
  UnfoldReport rep = try_unfold(bad, g);
  CHECK(rep.loop_error > 1e-9);
  CHECK_THROWS_WITH_AS(unfold(bad, g), "loop mismatch", std::runtime_error);

  std::array<Perm, 3> split = {Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(2 3)", 4),
                               Perm::identity(4)};
  CHECK_THROWS_AS(unfold(BaseTile::half_square(1.0), involution_graph(split)),
                  std::invalid_argument);
}

TEST_CASE("realizability of the catalog gluings") {
  // Trees qualify for every shape; the 21-tile one-cycle pair needs (and
  // has) an open set of shapes whose cycle closes without stacking.
  for (const PairSpec& p : catalog()) {
    if (p.corrupt) continue;
    CHECK(pair_realizable(p.gens_points(), p.gens_hyper()));
  }
}

TEST_CASE("square tiles reproduce the rectangle-base drawing") {
  const PairSpec& p = catalog_pair("7_3");
  // For each member some assignment of the three colors to square sides
  // yields the published corner inventory: one full turn, two 3 pi / 2,
  // eight right angles.
  std::vector<double> target = {kPi / 2, kPi / 2, kPi / 2, kPi / 2,     kPi / 2,
                                kPi / 2, kPi / 2, kPi / 2, 3 * kPi / 2, 3 * kPi / 2,
                                2 * kPi};
  for (const auto& gens : {p.gens_points(), p.gens_hyper()}) {
    ColoredGraph g = involution_graph(gens);
    bool found_drawing = false;
    for (int s0 = 0; s0 < 4 && !found_drawing; ++s0)
      for (int s1 = 0; s1 < 4 && !found_drawing; ++s1)
        for (int s2 = 0; s2 < 4 && !found_drawing; ++s2) {
          if (s0 == s1 || s0 == s2 || s1 == s2) continue;
          PlanarDomain dom;
          try {
            dom = unfold_squares(1.0, g, {s0, s1, s2});
          } catch (const std::runtime_error&) {
            continue;
          }
          CHECK(std::abs(dom.area() - 7.0) < 1e-12);
          WeylData w = weyl_data(dom);
          if (!angles_match(w.angles, target)) continue;
          found_drawing = true;
          // Corner angles are rational multiples of pi; the translation
          // surface glued from four reflected copies has genus 4.
          std::vector<Rat> over_pi;
          for (double a : w.angles) over_pi.push_back(angle_over_pi(a));
          CHECK(translation_surface_genus(over_pi) == 4);
        }
    CHECK(found_drawing);
  }
  CHECK_THROWS_AS(unfold_squares(1.0, involution_graph(p.gens_points()), {0, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("translation surface genus") {
  CHECK(translation_surface_genus({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}) == 1);
  CHECK(translation_surface_genus({Rat(1, 2), Rat(1, 4), Rat(1, 4)}) == 1);
  CHECK(translation_surface_genus({Rat(2), Rat(3, 2), Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2),
                                   Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}) == 4);
  CHECK_THROWS_AS(translation_surface_genus({Rat(2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(translation_surface_genus({Rat(-1, 2), Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(translation_surface_genus({}), std::invalid_argument);
}

TEST_CASE("angles as rational multiples of pi") {
  CHECK(angle_over_pi(3 * kPi / 2) == Rat(3, 2));
  CHECK(angle_over_pi(kPi / 180) == Rat(1, 180));
  CHECK(angle_over_pi(2 * kPi) == Rat(2));
  CHECK_THROWS_AS(angle_over_pi(1.0), std::invalid_argument);
  CHECK_THROWS_AS(angle_over_pi(kPi / 1234), std::invalid_argument);  // denominator too large
  CHECK(angle_over_pi(kPi / 1234, 2000) == Rat(1, 1234));
}

TEST_CASE("domain serialization") {
  const PairSpec& p = catalog_pair("7_3");
  PlanarDomain dom = unfold(BaseTile::half_square(1.0), involution_graph(p.gens_points()));
  std::string text = dom.to_json();
  nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.contains("tiles"));
  REQUIRE(parsed.contains("edges"));
  REQUIRE(parsed.contains("boundary"));
  CHECK(parsed["tiles"].size() == 7);
  for (const auto& tile : parsed["tiles"]) CHECK(tile.size() == 3);
  CHECK(parsed["edges"].size() == 6);
  // Nine boundary edges chain into one closed loop of nine vertices.
  CHECK(parsed["boundary"].size() == 9);
  CHECK(parsed["boundary"][0].size() == 2);
  CHECK(parsed["boundary"][0][0].is_number());
  // Serialization is deterministic.
  CHECK(text == dom.to_json());
}
