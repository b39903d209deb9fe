#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isodrum/perm.h"

namespace isodrum {

// One catalog record: the six gluing involutions of an isospectral pair.
// gens[0] acts on the tiles of the first member ("points"), gens[1] on the
// tiles of the second ("hyperplanes"); each holds the three side colors.
struct PairSpec {
  std::string name;
  std::string group_label;
  int d = 0;
  std::array<std::array<Perm, 3>, 2> gens;

  // Set when the source data fails involution validation (repeated indices,
  // wrong transposition count) or duplicates another record verbatim.
  bool corrupt = false;
  std::string corrupt_reason;

  const std::array<Perm, 3>& gens_points() const { return gens[0]; }
  const std::array<Perm, 3>& gens_hyper() const { return gens[1]; }
};

// Parses the catalog text format: one record per pair, lines
// `pair <name>`, `group <label>`, `d <int>`, then `a1 <cycles>` .. `c2 <cycles>`.
// '#' starts a comment. Records whose generators fail validation are
// flagged corrupt, not dropped.
std::vector<PairSpec> parse_catalog(const std::string& text);
std::string format_catalog(const std::vector<PairSpec>& pairs);

// The bundled 17-pair catalog.
const std::vector<PairSpec>& catalog();

// Bundled catalog source text (identical to data/catalog.txt).
const std::string& catalog_text();

const PairSpec& catalog_pair(const std::string& name);

}  // namespace isodrum
