#include "isodrum/gf.h"

#include <stdexcept>
#include <string>

namespace isodrum {

namespace {

int factor_prime_power(int q, int& p, int& k) {
  if (q < 2) return 0;
  p = q;
  for (int f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  k = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return m == 1;
}

// Polynomials over F_p encoded in base p, least-significant digit first.
std::vector<int> digits(int v, int p, int len) {
  std::vector<int> d(len, 0);
  for (int i = 0; i < len && v; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Remainder of a modulo the monic polynomial m (length deg+1, m.back()=1).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int deg_m = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= deg_m; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= deg_m; ++j)
      a[i - deg_m + j] = ((a[i - deg_m + j] - c * m[j]) % p + p * p) % p;
  }
  a.resize(deg_m);
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool divides(const std::vector<int>& d, const std::vector<int>& m, int p) {
  std::vector<int> r = poly_mod(m, d, p);
  for (int c : r)
    if (c) return false;
  return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// ordered by the encoded value of the k lower coefficients.
std::vector<int> find_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  for (int lowv = 0; ; ++lowv) {
    std::vector<int> m = digits(lowv, p, k);
    m.push_back(1);
    if (m[0] == 0) continue;  // divisible by x
    bool irreducible = true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int deg = 1; irreducible && 2 * deg <= k; ++deg) {
      int count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (int dv = 0; dv < count; ++dv) {
        std::vector<int> d = digits(dv, p, deg);
        d.push_back(1);
        if (divides(d, m, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return m;
  }
}

}  // namespace

bool is_prime_power(int q) {
  int p, k;
  return factor_prime_power(q, p, k) != 0;
}

GF::GF(int q) : q_(q) {
  if (!factor_prime_power(q, p_, k_))
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (q > 1024) throw std::invalid_argument("field too large");

  std::vector<int> m = find_irreducible(p_, k_);

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> da = digits(a, p_, k_);
    std::vector<int> na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(na, p_);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> db = digits(b, p_, k_);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s, p_);
      mul_[a * q_ + b] = encode(poly_mod(poly_mul(da, db, p_), m, p_), p_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;

  frob_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int GF::pow(int a, long long e) const {
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int GF::frob(int a, int e) const {
  int r = a;
  for (int i = 0; i < e % k_ + (e % k_ < 0 ? k_ : 0); ++i) r = frob_[r];
  return r;
}

}  // namespace isodrum
