#include "isodrum/intmat.h"

namespace isodrum {

IntMat IntMat::operator*(const IntMat& b) const {
  if (n_ != b.n_) throw std::invalid_argument("size mismatch");
  IntMat c(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      int64_t v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

IntMat IntMat::operator+(const IntMat& b) const {
  if (n_ != b.n_) throw std::invalid_argument("size mismatch");
  IntMat c(n_);
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] + b.a_[i];
  return c;
}

IntMat IntMat::operator-(const IntMat& b) const {
  if (n_ != b.n_) throw std::invalid_argument("size mismatch");
  IntMat c(n_);
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - b.a_[i];
  return c;
}

IntMat IntMat::transpose() const {
  IntMat c(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c(j, i) = (*this)(i, j);
  return c;
}

int64_t IntMat::trace() const {
  int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

int64_t IntMat::det() const {
  if (n_ == 0) return 1;
  std::vector<__int128> m(a_.begin(), a_.end());
  auto at = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * n_ + j]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n_; ++i)
        if (at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  __int128 d = at(n_ - 1, n_ - 1);
  if (sign < 0) d = -d;
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant overflow");
  return static_cast<int64_t>(d);
}

}  // namespace isodrum
