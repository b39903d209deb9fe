#include "isodrum/perm.h"

#include <algorithm>
#include <sstream>

namespace isodrum {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("not a permutation image table");
    seen[v] = 1;
  }
}

Perm Perm::parse_cycles(const std::string& text, int d) {
  std::vector<int> img(d);
  for (int i = 0; i < d; ++i) img[i] = i;
  std::vector<char> used(d, 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected index in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = 10 * v + (text[pos++] - '0');
      if (v >= d)
        throw std::invalid_argument("index " + std::to_string(v) + " out of range for degree " +
                                    std::to_string(d));
      if (used[v])
        throw std::invalid_argument("index " + std::to_string(v) + " repeated in " + text);
      used[v] = 1;
      cyc.push_back(v);
      skip_ws();
    }
    if (pos >= text.size())
      throw std::invalid_argument("unterminated cycle in " + text);
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& b) const {
  if (degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = img_[b.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  if (is_identity()) return false;
  for (int i = 0; i < degree(); ++i)
    if (img_[img_[i]] != i) return false;
  return true;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> fix;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) fix.push_back(i);
  return fix;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(degree(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(' << i;
    seen[i] = 1;
    for (int j = img_[i]; j != i; j = img_[j]) {
      out << ' ' << j;
      seen[j] = 1;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace isodrum
