#include "isodrum/lengths.h"

#include <stdexcept>

namespace isodrum {

namespace {

int num_fixed(const std::vector<int>& img) {
  int n = 0;
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] == static_cast<int>(i)) ++n;
  return n;
}

// Depth-first over words of exactly the remaining length, left letters
// applied last; words are visited in lexicographic order.
bool walk(const std::array<Perm, 3>& g1, const std::array<Perm, 3>& g2, int remaining,
          std::vector<int>& word, std::vector<int>& p1, std::vector<int>& p2,
          IsolengthReport& rep) {
  if (remaining == 0) {
    ++rep.words_checked;
    int f1 = num_fixed(p1), f2 = num_fixed(p2);
    if (f1 != f2) {
      rep.equal = false;
      rep.witness = word;
      rep.count_first = f1;
      rep.count_second = f2;
      return false;
    }
    return true;
  }
  int d = static_cast<int>(p1.size());
  std::vector<int> q1(d), q2(d);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < d; ++i) {
      q1[i] = g1[c](p1[i]);
      q2[i] = g2[c](p2[i]);
    }
    word.push_back(c);
    std::swap(p1, q1);
    std::swap(p2, q2);
    bool go_on = walk(g1, g2, remaining - 1, word, p1, p2, rep);
    std::swap(p1, q1);
    std::swap(p2, q2);
    word.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

IsolengthReport isolength_check(const std::array<Perm, 3>& gens1,
                                const std::array<Perm, 3>& gens2, int max_len) {
  if (max_len < 1 || max_len > 12) throw std::invalid_argument("max_len must be in 1..12");
  int d = gens1[0].degree();
  if (gens2[0].degree() != d) throw std::invalid_argument("degree mismatch");

  IsolengthReport rep;
  rep.max_len = max_len;
  // Shortest witness first: scan all words of length L before length L+1.
  for (int len = 1; len <= max_len && rep.equal; ++len) {
    std::vector<int> word;
    std::vector<int> p1(d), p2(d);
    for (int i = 0; i < d; ++i) p1[i] = p2[i] = i;
    walk(gens1, gens2, len, word, p1, p2, rep);
  }
  return rep;
}

}  // namespace isodrum
