#include "isodrum/transplant.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "isodrum/adjacency.h"

namespace isodrum {

namespace {

int check_degrees(const std::array<Perm, 3>& gens_m, const std::array<Perm, 3>& gens_n) {
  int d = gens_m[0].degree();
  for (const auto& g : gens_m)
    if (g.degree() != d) throw std::invalid_argument("degree mismatch");
  for (const auto& g : gens_n)
    if (g.degree() != d) throw std::invalid_argument("degree mismatch");
  return d;
}

IntMat from_orbit_coeffs(const Commutant& c, const std::vector<int>& coeff) {
  IntMat t(c.d);
  for (int i = 0; i < c.d; ++i)
    for (int j = 0; j < c.d; ++j) t(i, j) = coeff[c.orbit(i, j)];
  return t;
}

bool constant_row_col_sums(const IntMat& t) {
  int n = t.size();
  int64_t r0 = 0, c0 = 0;
  for (int j = 0; j < n; ++j) r0 += t(0, j);
  for (int i = 0; i < n; ++i) c0 += t(i, 0);
  for (int i = 1; i < n; ++i) {
    int64_t r = 0, c = 0;
    for (int j = 0; j < n; ++j) {
      r += t(i, j);
      c += t(j, i);
    }
    if (r != r0 || c != c0) return false;
  }
  return true;
}

int64_t nnz(const IntMat& t) {
  int64_t k = 0;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t(i, j) != 0) ++k;
  return k;
}

}  // namespace

Commutant commutant(const std::array<Perm, 3>& gens_m, const std::array<Perm, 3>& gens_n) {
  Commutant c;
  c.d = check_degrees(gens_m, gens_n);
  int n2 = c.d * c.d;
  c.orbit_of.assign(n2, -1);
  for (int start = 0; start < n2; ++start) {
    if (c.orbit_of[start] >= 0) continue;
    int id = c.dim++;
    std::vector<int> stack = {start};
    c.orbit_of[start] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      int i = cur / c.d, j = cur % c.d;
      for (int mu = 0; mu < 3; ++mu) {
        int nxt = gens_n[mu](i) * c.d + gens_m[mu](j);
        if (c.orbit_of[nxt] < 0) {
          c.orbit_of[nxt] = id;
          stack.push_back(nxt);
        }
      }
    }
  }
  return c;
}

std::optional<IntMat> solve_transplantation(const std::array<Perm, 3>& gens_m,
                                            const std::array<Perm, 3>& gens_n, int max_dim) {
  Commutant c = commutant(gens_m, gens_n);
  if (c.dim > max_dim) return std::nullopt;

  std::optional<IntMat> best;
  bool best_constant = false;
  int64_t best_nnz = 0;
  for (unsigned mask = 1; mask < (1u << c.dim); ++mask) {
    std::vector<int> coeff(c.dim, 0);
    for (int k = 0; k < c.dim; ++k)
      if (mask & (1u << k)) coeff[k] = 1;
    IntMat t = from_orbit_coeffs(c, coeff);
    if (t.det() == 0) continue;
    bool constant = constant_row_col_sums(t);
    int64_t k = nnz(t);
    if (!best || (constant && !best_constant) ||
        (constant == best_constant && k < best_nnz)) {
      best = t;
      best_constant = constant;
      best_nnz = k;
    }
  }
  return best;
}

TransplantReport classify_transplantation(const std::array<Perm, 3>& gens_m,
                                          const std::array<Perm, 3>& gens_n, int max_dim) {
  Commutant c = commutant(gens_m, gens_n);
  if (c.dim > max_dim) throw std::length_error("commutant dimension too large");

  TransplantReport report;
  report.commutant_dim = c.dim;
  std::optional<IntMat> best_nonperm, best_perm;
  bool nonperm_constant = false;
  int64_t nonperm_nnz = 0;
  for (unsigned mask = 1; mask < (1u << c.dim); ++mask) {
    std::vector<int> coeff(c.dim, 0);
    for (int k = 0; k < c.dim; ++k)
      if (mask & (1u << k)) coeff[k] = 1;
    IntMat t = from_orbit_coeffs(c, coeff);
    if (t.det() == 0) continue;
    if (nnz(t) == c.d) {  // invertible 0/1 with d nonzeros is a permutation
      if (!best_perm) best_perm = t;
      continue;
    }
    bool constant = constant_row_col_sums(t);
    int64_t k = nnz(t);
    if (!best_nonperm || (constant && !nonperm_constant) ||
        (constant == nonperm_constant && k < nonperm_nnz)) {
      best_nonperm = t;
      nonperm_constant = constant;
      nonperm_nnz = k;
    }
  }
  // A permutation solution is a color-preserving relabeling: the two
  // unfoldings have the same shape, so the pair is only congruent no matter
  // what else the commutant holds.
  if (best_perm) {
    report.status = TransplantStatus::congruent;
    report.t = best_perm;
  } else if (best_nonperm) {
    report.status = TransplantStatus::found;
    report.t = best_nonperm;
  }
  return report;
}

SignedCommutant signed_commutant(const std::array<Perm, 3>& gens_m,
                                 const std::array<Perm, 3>& gens_n) {
  SignedCommutant c;
  c.d = check_degrees(gens_m, gens_n);
  int n2 = c.d * c.d;
  c.orbit_of.assign(n2, -2);  // -2 unvisited, -1 inconsistent
  c.sign_of.assign(n2, 0);

  for (int start = 0; start < n2; ++start) {
    if (c.orbit_of[start] != -2) continue;
    // Propagate T(nu(i), mu(j)) = s_mu(j) s_nu(i) T(i, j).
    std::vector<int> members = {start};
    c.orbit_of[start] = -3;  // tentative
    c.sign_of[start] = 1;
    bool consistent = true;
    for (size_t k = 0; k < members.size(); ++k) {
      int cur = members[k];
      int i = cur / c.d, j = cur % c.d;
      for (int mu = 0; mu < 3; ++mu) {
        int i2 = gens_n[mu](i), j2 = gens_m[mu](j);
        int s = ((i2 == i) ? -1 : 1) * ((j2 == j) ? -1 : 1);
        int nxt = i2 * c.d + j2;
        int want = s * c.sign_of[cur];
        if (c.orbit_of[nxt] == -2) {
          c.orbit_of[nxt] = -3;
          c.sign_of[nxt] = want;
          members.push_back(nxt);
        } else if (c.sign_of[nxt] != want) {
          consistent = false;
        }
      }
    }
    int id = consistent ? c.dim++ : -1;
    for (int m : members) c.orbit_of[m] = id;
    if (!consistent)
      for (int m : members) c.sign_of[m] = 0;
  }
  return c;
}

std::optional<IntMat> solve_signed_transplantation(const std::array<Perm, 3>& gens_m,
                                                   const std::array<Perm, 3>& gens_n,
                                                   int max_dim) {
  SignedCommutant c = signed_commutant(gens_m, gens_n);
  if (c.dim > max_dim) return std::nullopt;

  auto build = [&](const std::vector<int>& coeff) {
    IntMat t(c.d);
    for (int i = 0; i < c.d; ++i)
      for (int j = 0; j < c.d; ++j) {
        int id = c.orbit(i, j);
        t(i, j) = id < 0 ? 0 : coeff[id] * c.sign_of[i * c.d + j];
      }
    return t;
  };

  std::optional<IntMat> best;
  bool best_constant = false;
  int64_t best_nnz = 0;
  int total = 1;
  for (int k = 0; k < c.dim; ++k) total *= 3;
  for (int enc = 1; enc < total; ++enc) {
    std::vector<int> coeff(c.dim);
    int e = enc;
    for (int k = 0; k < c.dim; ++k) {
      coeff[k] = e % 3 - 1;  // -1, 0, 1
      e /= 3;
    }
    IntMat t = build(coeff);
    if (t.det() == 0) continue;
    bool constant = constant_row_col_sums(t);
    int64_t k = nnz(t);
    if (!best || (constant && !best_constant) ||
        (constant == best_constant && k < best_nnz)) {
      best = t;
      best_constant = constant;
      best_nnz = k;
    }
  }
  return best;
}

IntMat word_matrix(const std::array<Perm, 3>& gens, const std::vector<int>& word) {
  IntMat m = IntMat::identity(gens[0].degree());
  for (int c : word) {
    if (c < 0 || c > 2) throw std::invalid_argument("word letters must be 0..2");
    m = perm_matrix(gens[c]) * m;
  }
  return m;
}

int64_t commutation_residual(const IntMat& t, const std::array<Perm, 3>& gens_m,
                             const std::array<Perm, 3>& gens_n, bool signed_matrices) {
  int64_t worst = 0;
  for (int mu = 0; mu < 3; ++mu) {
    IntMat m = signed_matrices ? signed_perm_matrix(gens_m[mu]) : perm_matrix(gens_m[mu]);
    IntMat n = signed_matrices ? signed_perm_matrix(gens_n[mu]) : perm_matrix(gens_n[mu]);
    IntMat r = t * m - n * t;
    for (int i = 0; i < r.size(); ++i)
      for (int j = 0; j < r.size(); ++j) worst = std::max(worst, std::abs(r(i, j)));
  }
  return worst;
}

}  // namespace isodrum
