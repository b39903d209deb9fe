#pragma once

#include <vector>

namespace isodrum {

// Arithmetic tables for GF(p^k). Elements are 0..q-1, encoding polynomials
// over F_p in base p (digit i = coefficient of x^i), reduced modulo the
// lexicographically smallest monic irreducible of degree k, so that the
// tables are reproducible. For GF(4) this gives x^2 = x + 1.
class GF {
 public:
  explicit GF(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on 0
  int pow(int a, long long e) const;

  // x -> x^(p^e), the e-th power of the Frobenius automorphism.
  int frob(int a, int e = 1) const;

  // True iff q has an automorphism of order 2 (k even); that automorphism
  // is frob(., k/2), fixing the subfield GF(sqrt(q)).
  bool has_order2_automorphism() const { return k_ % 2 == 0; }

 private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

bool is_prime_power(int q);

}  // namespace isodrum
