#include "isodrum/pairspec.h"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isodrum/adjacency.h"

namespace isodrum {

namespace {

const char* kCatalogText = R"(# Catalog of the 17 known isospectral billiard pairs.
# One record per pair: name, operator group label, tile count d,
# then the three point generators a1,b1,c1 and the three
# hyperplane generators a2,b2,c2 as 0-based transposition products.
# Records 13_4, 13_5, 13_9 and 15_4 reproduce their sources verbatim,
# including the defects noted inline; the loader flags them instead of
# repairing them.

pair 7_1
group PSL(3,2)
d 7
a1 (0 1)(2 5)
b1 (0 2)(3 4)
c1 (0 4)(1 6)
a2 (0 4)(2 3)
b2 (0 1)(4 6)
c2 (0 2)(1 5)

pair 7_2
group PSL(3,2)
d 7
a1 (0 1)(2 5)
b1 (1 5)(3 4)
c1 (0 4)(1 6)
a2 (0 4)(2 3)
b2 (0 6)(1 4)
c2 (0 2)(1 5)

pair 7_3
group PSL(3,2)
d 7
a1 (2 5)(4 6)
b1 (1 5)(3 4)
c1 (0 4)(1 6)
a2 (0 3)(2 4)
b2 (0 6)(1 4)
c2 (0 2)(1 5)

pair 13_1
group PSL(3,3)
d 13
a1 (0 12)(1 10)(3 5)(6 7)
b1 (0 10)(2 9)(3 4)(5 8)
c1 (0 4)(1 6)(2 11)(9 12)
a2 (0 4)(2 3)(6 8)(9 10)
b2 (0 12)(1 4)(5 11)(6 9)
c2 (0 10)(1 5)(2 7)(3 12)

pair 13_2
group PSL(3,3)
d 13
a1 (0 12)(1 10)(3 5)(6 7)
b1 (1 12)(2 9)(3 8)(4 5)
c1 (0 4)(1 6)(2 11)(9 12)
a2 (0 4)(2 3)(6 8)(9 10)
b2 (0 1)(4 12)(5 11)(8 10)
c2 (0 10)(1 5)(2 7)(3 12)

pair 13_3
group PSL(3,3)
d 13
a1 (1 7)(3 5)(4 9)(6 10)
b1 (1 12)(2 9)(3 8)(4 5)
c1 (0 4)(1 6)(2 11)(9 12)
a2 (0 9)(4 10)(6 8)(7 12)
b2 (0 1)(4 12)(5 11)(8 10)
c2 (0 10)(1 5)(2 7)(3 12)

# Source data for 13_4 is defective: tile 8 appears in no member-1
# generator (disconnected graph) and member 2 glues 2-7 twice.
pair 13_4
group PSL(3,3)
d 13
a1 (1 7)(3 5)(4 9)(6 10)
b1 (0 5)(1 2)(6 12)(9 11)
c1 (0 4)(1 6)(2 11)(9 12)
a2 (0 9)(4 10)(6 8)(7 12)
b2 (0 11)(1 8)(2 7)(3 4)
c2 (0 10)(1 5)(2 7)(3 12)

# Source prints 13_5 with exactly the generators of 13_4,
# defects included.
pair 13_5
group PSL(3,3)
d 13
a1 (1 7)(3 5)(4 9)(6 10)
b1 (0 5)(1 2)(6 12)(9 11)
c1 (0 4)(1 6)(2 11)(9 12)
a2 (0 9)(4 10)(6 8)(7 12)
b2 (0 11)(1 8)(2 7)(3 4)
c2 (0 10)(1 5)(2 7)(3 12)

pair 13_6
group PSL(3,3)
d 13
a1 (0 2)(1 7)(3 6)(5 10)
b1 (0 6)(2 4)(3 8)(5 9)
c1 (0 5)(1 2)(6 12)(9 11)
a2 (0 7)(3 11)(6 8)(9 12)
b2 (0 8)(1 10)(5 11)(7 9)
c2 (0 11)(1 8)(2 7)(3 4)

pair 13_7
group PSL(3,3)
d 13
a1 (0 2)(1 7)(3 6)(5 10)
b1 (0 4)(2 3)(6 8)(9 10)
c1 (0 5)(1 2)(6 12)(9 11)
a2 (0 7)(3 11)(6 8)(9 12)
b2 (0 12)(1 10)(3 5)(6 7)
c2 (0 11)(1 8)(2 7)(3 4)

pair 13_8
group PSL(3,3)
d 13
a1 (0 10)(1 5)(2 7)(3 12)
b1 (0 4)(2 3)(6 8)(9 10)
c1 (0 5)(1 2)(6 12)(9 11)
a2 (0 4)(1 6)(2 11)(9 12)
b2 (0 12)(1 10)(3 5)(6 7)
c2 (0 11)(1 8)(2 7)(3 4)

# Source data for 13_9 is defective: tiles 4 and 8 appear in no member-1
# generator and 9-11 is glued twice there; member 2 is disconnected too.
pair 13_9
group PSL(3,3)
d 13
a1 (0 10)(1 5)(2 7)(3 12)
b1 (1 10)(3 6)(5 7)(9 11)
c1 (0 5)(1 2)(6 12)(9 11)
a2 (0 4)(1 6)(2 11)(9 12)
b2 (0 3)(2 4)(6 8)(7 11)
c2 (0 11)(1 8)(2 7)(3 4)

pair 15_1
group PSL(4,2)
d 15
a1 (0 14)(1 12)(2 6)(4 5)(7 11)(9 10)
b1 (1 13)(2 7)(4 6)(8 9)
c1 (1 14)(2 12)(3 4)(8 11)
a2 (0 11)(1 5)(3 4)(6 10)(8 9)(13 14)
b2 (0 10)(1 2)(6 9)(12 14)
c2 (0 5)(2 4)(6 7)(11 14)

pair 15_2
group PSL(4,2)
d 15
a1 (0 14)(1 12)(2 6)(4 5)(7 11)(9 10)
b1 (1 13)(2 7)(4 6)(8 9)
c1 (0 12)(1 6)(3 5)(7 8)
a2 (0 11)(1 5)(3 4)(6 10)(8 9)(13 14)
b2 (0 10)(1 2)(6 9)(12 14)
c2 (0 13)(1 11)(2 3)(7 10)

pair 15_3
group PSL(4,2)
d 15
a1 (0 14)(2 11)(4 7)(5 6)(8 10)(12 13)
b1 (1 13)(2 7)(4 6)(8 9)
c1 (0 12)(1 6)(3 5)(7 8)
a2 (0 9)(2 5)(3 4)(6 8)(10 11)(12 13)
b2 (0 10)(1 2)(6 9)(12 14)
c2 (0 13)(1 11)(2 3)(7 10)

# Source data for 15_4 is defective: b1 repeats index 8 (and 9),
# b2 lists only three transpositions. Kept verbatim.
pair 15_4
group PSL(4,2)
d 15
a1 (0 14)(2 11)(4 7)(5 6)(8 10)(12 13)
b1 (1 4)(2 8)(7 9)(8 9)
c1 (0 12)(1 6)(3 5)(7 8)
a2 (0 9)(2 5)(3 4)(6 8)(10 11)(12 13)
b2 (6 9)(7 13)(12 14)
c2 (0 13)(1 11)(2 3)(7 10)

pair 21_1
group PSL(3,4)
d 21
a1 (2 7)(3 11)(5 12)(8 18)(13 14)(15 17)(16 20)
b1 (0 17)(3 8)(4 12)(6 13)(9 19)(14 15)(16 18)
c1 (1 8)(2 16)(4 11)(5 19)(7 14)(10 17)(13 20)
a2 (0 1)(4 17)(7 12)(9 16)(10 20)(11 13)(15 19)
b2 (0 20)(3 16)(6 11)(8 15)(9 19)(10 12)(14 18)
c2 (1 8)(2 16)(4 11)(5 19)(7 14)(10 17)(13 20)
)";

struct RawRecord {
  std::string name, group;
  int d = 0;
  std::array<std::string, 6> lines;  // a1 b1 c1 a2 b2 c2
  std::array<bool, 6> have{};
};

int gen_slot(const std::string& key) {
  static const std::map<std::string, int> slots = {{"a1", 0}, {"b1", 1}, {"c1", 2},
                                                   {"a2", 3}, {"b2", 4}, {"c2", 5}};
  auto it = slots.find(key);
  return it == slots.end() ? -1 : it->second;
}

void add_reason(PairSpec& p, const std::string& reason) {
  p.corrupt = true;
  if (!p.corrupt_reason.empty()) p.corrupt_reason += "; ";
  p.corrupt_reason += reason;
}

// A record is usable only if every generator acts as a gluing involution and
// each member's tiles form one connected patch, with no tile pair glued twice.
void validate_graphs(PairSpec& p) {
  for (int m = 0; m < 2; ++m) {
    ColoredGraph g = involution_graph(p.gens[m]);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges)
      if (!seen.insert({e.a, e.b}).second)
        add_reason(p, "member " + std::to_string(m + 1) + " glues tiles " +
                          std::to_string(e.a) + " and " + std::to_string(e.b) +
                          " with two colors");
    if (!g.connected)
      add_reason(p, "member " + std::to_string(m + 1) + " involution graph is disconnected");
  }
}

PairSpec build_record(const RawRecord& raw) {
  PairSpec p;
  p.name = raw.name;
  p.group_label = raw.group;
  p.d = raw.d;
  if (raw.d <= 0) {
    add_reason(p, "missing or invalid d");
    return p;
  }
  bool parsed_all = true;
  for (int s = 0; s < 6; ++s) {
    if (!raw.have[s]) {
      add_reason(p, "missing generator line");
      parsed_all = false;
      continue;
    }
    try {
      Perm g = Perm::parse_cycles(raw.lines[s], raw.d);
      if (!g.is_involution()) {
        add_reason(p, "generator is not an involution: " + raw.lines[s]);
        parsed_all = false;
      }
      p.gens[s / 3][s % 3] = g;
    } catch (const std::exception& e) {
      add_reason(p, e.what());
      parsed_all = false;
      p.gens[s / 3][s % 3] = Perm::identity(raw.d);
    }
  }
  if (parsed_all) validate_graphs(p);
  return p;
}

std::vector<PairSpec> parse_and_validate(const std::string& text) {
  std::vector<RawRecord> raws;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "pair") {
      raws.emplace_back();
      ls >> raws.back().name;
      continue;
    }
    if (raws.empty())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": data before 'pair'");
    RawRecord& r = raws.back();
    if (key == "group") {
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      r.group = b == std::string::npos ? "" : rest.substr(b);
    } else if (key == "d") {
      ls >> r.d;
    } else {
      int s = gen_slot(key);
      if (s < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key " + key);
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      r.lines[s] = b == std::string::npos ? "" : rest.substr(b);
      r.have[s] = true;
    }
  }

  std::vector<PairSpec> out;
  out.reserve(raws.size());
  for (const auto& raw : raws) out.push_back(build_record(raw));

  // A record reproducing an earlier one verbatim is flagged, not dropped.
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (out[j].d != out[i].d) continue;
      if (out[j].gens == out[i].gens) {
        add_reason(out[i], "duplicates " + out[j].name + " verbatim");
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PairSpec> parse_catalog(const std::string& text) { return parse_and_validate(text); }

std::string format_catalog(const std::vector<PairSpec>& pairs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& p : pairs) {
    if (!first) out << "\n";
    first = false;
    out << "pair " << p.name << "\n";
    out << "group " << p.group_label << "\n";
    out << "d " << p.d << "\n";
    static const char* keys[6] = {"a1", "b1", "c1", "a2", "b2", "c2"};
    for (int s = 0; s < 6; ++s)
      out << keys[s] << " " << p.gens[s / 3][s % 3].to_cycles() << "\n";
  }
  return out.str();
}

const std::string& catalog_text() {
  static const std::string text = kCatalogText;
  return text;
}

const std::vector<PairSpec>& catalog() {
  static const std::vector<PairSpec> pairs = parse_and_validate(catalog_text());
  return pairs;
}

const PairSpec& catalog_pair(const std::string& name) {
  for (const auto& p : catalog())
    if (p.name == name) return p;
  throw std::out_of_range("no catalog pair named " + name);
}

}  // namespace isodrum
