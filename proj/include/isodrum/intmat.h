#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace isodrum {

// Dense square integer matrix with exact arithmetic, sized for the
// small combinatorial matrices used here (d <= 21).
class IntMat {
public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }

  IntMat operator*(const IntMat& b) const;
  IntMat operator+(const IntMat& b) const;
  IntMat operator-(const IntMat& b) const;
  IntMat transpose() const;

  int64_t trace() const;

  // Exact determinant by Bareiss fraction-free elimination.
  // Throws on overflow of the 128-bit intermediates.
  int64_t det() const;

private:
  int n_ = 0;
  std::vector<int64_t> a_;
};

}  // namespace isodrum
