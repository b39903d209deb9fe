#include "isodrum/rational.h"

namespace isodrum {

Rat RatMat::det() const {
  if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
  RatMat m = *this;
  Rat d(1);
  for (int k = 0; k < r_; ++k) {
    int p = -1;
    for (int i = k; i < r_; ++i)
      if (m(i, k).num() != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != k) {
      for (int j = 0; j < c_; ++j) std::swap(m(k, j), m(p, j));
      d = -d;
    }
    d *= m(k, k);
    Rat inv = Rat(1) / m(k, k);
    for (int i = k + 1; i < r_; ++i) {
      Rat f = m(i, k) * inv;
      if (f.num() == 0) continue;
      for (int j = k; j < c_; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

RatMat RatMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  RatMat m = *this;
  RatMat inv = RatMat::identity(r_);
  for (int k = 0; k < r_; ++k) {
    int p = -1;
    for (int i = k; i < r_; ++i)
      if (m(i, k).num() != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("singular matrix");
    if (p != k)
      for (int j = 0; j < c_; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = Rat(1) / m(k, k);
    for (int j = 0; j < c_; ++j) {
      m(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (int i = 0; i < r_; ++i) {
      if (i == k || m(i, k).num() == 0) continue;
      Rat f = m(i, k);
      for (int j = 0; j < c_; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace isodrum
