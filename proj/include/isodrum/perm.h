#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace isodrum {

// Permutation of {0,...,d-1}, stored as the image table img[i] = sigma(i).
class Perm {
public:
  Perm() = default;
  explicit Perm(int d) : img_(d) {
    for (int i = 0; i < d; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<int> img);

  static Perm identity(int d) { return Perm(d); }

  // Parses products of parenthesized cycles with space-separated 0-based
  // indices, e.g. "(2 5)(4 6)". The empty string is the identity.
  // Rejects indices outside [0,d) and indices appearing twice.
  static Perm parse_cycles(const std::string& text, int d);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }

  bool operator==(const Perm& o) const { return img_ == o.img_; }

  // (a*b)(i) = a(b(i))
  Perm operator*(const Perm& b) const;
  Perm inverse() const;

  bool is_identity() const;
  bool is_involution() const;  // sigma^2 = id, sigma != id
  std::vector<int> fixed_points() const;
  int num_fixed() const { return static_cast<int>(fixed_points().size()); }

  // Canonical cycle notation; fixed points omitted; "()" for the identity.
  std::string to_cycles() const;

  // Sorted cycle lengths > 1.
  std::vector<int> cycle_type() const;

  const std::vector<int>& images() const { return img_; }

private:
  std::vector<int> img_;
};

}  // namespace isodrum
