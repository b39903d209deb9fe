#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "isodrum/perm.h"

namespace isodrum {

// Closed lifts of a base-tile trajectory that crosses the side sequence w
// are counted by Tr(M^(w_k) ... M^(w_1)), which equals the number of fixed
// points of the composed permutation. Two unfoldings of the same tile have
// identical length spectra iff these counts agree for every side sequence.
struct IsolengthReport {
  bool equal = true;
  int max_len = 0;
  int64_t words_checked = 0;
  // Shortest mismatching side sequence (0-based colors), lexicographically
  // first among the shortest; empty when equal.
  std::optional<std::vector<int>> witness;
  int64_t count_first = 0, count_second = 0;  // lift counts at the witness
};

IsolengthReport isolength_check(const std::array<Perm, 3>& gens1,
                                const std::array<Perm, 3>& gens2, int max_len);

}  // namespace isodrum
