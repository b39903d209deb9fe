#include "isodrum/adjacency.h"

#include <algorithm>
#include <stdexcept>

namespace isodrum {

IntMat perm_matrix(const Perm& sigma) {
  IntMat m(sigma.degree());
  for (int i = 0; i < sigma.degree(); ++i) m(i, sigma(i)) = 1;
  return m;
}

IntMat signed_perm_matrix(const Perm& sigma) {
  IntMat m = perm_matrix(sigma);
  for (int i = 0; i < sigma.degree(); ++i)
    if (sigma(i) == i) m(i, i) = -1;
  return m;
}

ColoredGraph involution_graph(const std::array<Perm, 3>& gens) {
  ColoredGraph g;
  g.d = gens[0].degree();
  g.gens = gens;
  for (int mu = 0; mu < 3; ++mu) {
    if (gens[mu].degree() != g.d) throw std::invalid_argument("degree mismatch");
    for (int i = 0; i < g.d; ++i)
      if (gens[mu](i) > i) g.edges.push_back({i, gens[mu](i), mu});
  }

  std::vector<int> comp(g.d, -1);
  int ncomp = 0;
  for (int s = 0; s < g.d; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int mu = 0; mu < 3; ++mu) {
        int w = gens[mu](v);
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  g.connected = (ncomp == 1);
  g.cycle_rank = static_cast<int>(g.edges.size()) - g.d + ncomp;
  return g;
}

IntMat ColoredGraph::adjacency() const {
  IntMat a(d);
  for (const auto& e : edges) {
    a(e.a, e.b) += 1;
    a(e.b, e.a) += 1;
  }
  return a;
}

IntMat ColoredGraph::gluing_sum() const {
  IntMat a = adjacency();
  for (int i = 0; i < d; ++i)
    for (int mu = 0; mu < 3; ++mu)
      if (gens[mu](i) == i) a(i, i) += 1;
  return a;
}

std::vector<int64_t> trace_table(const IntMat& a) {
  std::vector<int64_t> traces;
  IntMat p = a;
  for (int l = 1; l <= a.size(); ++l) {
    traces.push_back(p.trace());
    if (l < a.size()) p = p * a;
  }
  return traces;
}

bool graph_isospectral(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.d != g2.d) throw std::invalid_argument("vertex count mismatch");
  return trace_table(g1.adjacency()) == trace_table(g2.adjacency());
}

bool gluing_isospectral(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.d != g2.d) throw std::invalid_argument("vertex count mismatch");
  return trace_table(g1.gluing_sum()) == trace_table(g2.gluing_sum());
}

std::optional<Perm> conjugating_map(const std::array<Perm, 3>& sigma,
                                    const std::array<Perm, 3>& tau) {
  int d = sigma[0].degree();
  if (tau[0].degree() != d) return std::nullopt;
  if (!involution_graph(sigma).connected || !involution_graph(tau).connected)
    throw std::invalid_argument("conjugating_map requires connected graphs");

  for (int j0 = 0; j0 < d; ++j0) {
    std::vector<int> img(d, -1);
    img[0] = j0;
    std::vector<int> stack = {0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int mu = 0; mu < 3; ++mu) {
        int i2 = sigma[mu](i);
        int j2 = tau[mu](img[i]);
        if (img[i2] < 0) {
          img[i2] = j2;
          stack.push_back(i2);
        } else if (img[i2] != j2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(d, 0);
    for (int v : img) {
      if (v < 0 || hit[v]) {
        ok = false;
        break;
      }
      hit[v] = 1;
    }
    if (!ok) continue;
    Perm g{std::vector<int>(img)};
    bool valid = true;
    for (int mu = 0; mu < 3 && valid; ++mu)
      for (int i = 0; i < d; ++i)
        if (g(sigma[mu](i)) != tau[mu](g(i))) {
          valid = false;
          break;
        }
    if (valid) return g;
  }
  return std::nullopt;
}

bool pairs_equivalent(const std::array<Perm, 3>& a1, const std::array<Perm, 3>& a2,
                      const std::array<Perm, 3>& b1, const std::array<Perm, 3>& b2) {
  static const int color_perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& cp : color_perm) {
    std::array<Perm, 3> rb1 = {b1[cp[0]], b1[cp[1]], b1[cp[2]]};
    std::array<Perm, 3> rb2 = {b2[cp[0]], b2[cp[1]], b2[cp[2]]};
    if (conjugating_map(a1, rb1) && conjugating_map(a2, rb2)) return true;
    if (conjugating_map(a1, rb2) && conjugating_map(a2, rb1)) return true;
  }
  return false;
}

}  // namespace isodrum
