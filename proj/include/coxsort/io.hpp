// io.hpp --- text formats, presets, and JSON/DOT exports
//
// External conventions: generators and word positions are 1-based in all
// text, a Coxeter matrix file starts with the rank followed by the matrix
// rows (0 meaning an infinite bond), words are whitespace-separated indices
// or a compact digit string when the rank is below ten, and set-system
// files list one feasible set per line ("-" for the empty set). Exports are
// deterministic: element and edge orders are fixed everywhere.

#pragma once

#include <json.hpp>

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "coxsort/coxeter.hpp"
#include "coxsort/set_system.hpp"
#include "coxsort/sortables.hpp"
#include "coxsort/sorting_order.hpp"
#include "coxsort/words.hpp"

namespace coxsort::io {

using json = nlohmann::ordered_json;

// --- Coxeter matrices -----------------------------------------------------

inline CoxeterMatrix type_a_matrix(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return CoxeterMatrix::from_entries(std::move(m));
}

// Named presets: "A<n>", "B<n>" (bond 4 between the first two generators),
// "D<n>" (fork at the second generator), "H3", "I2:<m>" with "I2:0" or
// "I2:inf" for the infinite dihedral group.
inline CoxeterMatrix preset_matrix(const std::string& name) {
  auto chain = [&](int n, int first_bond) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    if (n >= 2) m[0][1] = m[1][0] = first_bond;
    return m;
  };
  auto parse_int = [&](std::size_t from) {
    if (from >= name.size()) throw std::invalid_argument("unknown preset: " + name);
    for (std::size_t i = from; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i])))
        throw std::invalid_argument("unknown preset: " + name);
    return std::stoi(name.substr(from));
  };
  if (name == "H3") {
    auto m = chain(3, 5);
    return CoxeterMatrix::from_entries(std::move(m));
  }
  if (name.rfind("I2:", 0) == 0) {
    int m = name == "I2:inf" ? infinite_bond : parse_int(3);
    if (m != infinite_bond && m < 2)
      throw std::invalid_argument("I2:<m> needs m >= 2 (or 0/inf)");
    return CoxeterMatrix::from_entries({{1, m}, {m, 1}});
  }
  if (!name.empty() && name[0] == 'A') return type_a_matrix(parse_int(1));
  if (!name.empty() && name[0] == 'B') {
    int n = parse_int(1);
    if (n < 2) throw std::invalid_argument("B<n> needs n >= 2");
    return CoxeterMatrix::from_entries(chain(n, 4));
  }
  if (!name.empty() && name[0] == 'D') {
    int n = parse_int(1);
    if (n < 4) throw std::invalid_argument("D<n> needs n >= 4");
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    // chain 1-2-...-(n-2) with both n-1 and n attached to n-2
    for (int i = 0; i + 1 < n - 2; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    m[n - 3][n - 2] = m[n - 2][n - 3] = 3;
    m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
    return CoxeterMatrix::from_entries(std::move(m));
  }
  throw std::invalid_argument("unknown preset: " + name);
}

inline CoxeterMatrix parse_matrix(std::istream& in) {
  int n;
  if (!(in >> n) || n < 0) throw std::invalid_argument("bad matrix header");
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> m[i][j])) throw std::invalid_argument("bad matrix entry");
  return CoxeterMatrix::from_entries(std::move(m));
}

inline std::string format_matrix(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << m.rank() << "\n";
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j) os << (j ? " " : "") << m.m[i][j];
    os << "\n";
  }
  return os.str();
}

// --- words and index sets ---------------------------------------------------

// "1 2 3 2 1 2" or the compact "123212" (only when n <= 9); 1-based input.
inline std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> out;
  bool spaced = text.find_first_of(" \t,") != std::string::npos;
  if (spaced) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      for (char& c : tok)
        if (c == ',') c = ' ';
      std::istringstream tin(tok);
      int v;
      bool any = false;
      while (tin >> v) {
        out.push_back(v - 1);
        any = true;
      }
      if (!any || !tin.eof())
        throw std::invalid_argument("bad word: " + text);
    }
  } else {
    if (rank > 9)
      throw std::invalid_argument("compact word form needs rank <= 9");
    for (char ch : text) {
      if (!isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad word: " + text);
      out.push_back(ch - '1');
    }
  }
  for (int s : out)
    if (s < 0 || s >= rank)
      throw std::invalid_argument("word letter out of range in: " + text);
  return out;
}

inline std::vector<int> parse_index_set(const std::string& text) {
  std::vector<int> out;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::istringstream in(cleaned);
  int v;
  while (in >> v) out.push_back(v - 1);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("repeated index in: " + text);
  return out;
}

inline std::string format_index_set(const std::vector<int>& indices) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < indices.size(); ++i)
    os << (i ? "," : "") << indices[i] + 1;
  os << "}";
  return os.str();
}

inline std::string format_word(const std::vector<int>& letters) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < letters.size(); ++i)
    os << (i ? "," : "") << letters[i] + 1;
  os << ")";
  return os.str();
}

// Placeholder notation: digit of the letter at each selected position,
// zero elsewhere, e.g. "0212". Only for ranks below ten.
inline std::string placeholder_string(const SortingWord& w, SetMask set) {
  std::string out(w.size(), '0');
  for (int i = 0; i < w.size(); ++i)
    if (set >> i & 1) out[i] = static_cast<char>('1' + w.letters[i]);
  return out;
}

// --- set systems -----------------------------------------------------------

inline SetSystem parse_set_system(std::istream& in) {
  int n;
  if (!(in >> n)) throw std::invalid_argument("bad set-system header");
  std::string line;
  std::getline(in, line);
  std::vector<SetMask> sets;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    SetMask mask = 0;
    bool any = false;
    while (ls >> tok) {
      any = true;
      if (tok == "-") continue;
      int v = std::stoi(tok);
      if (v < 1 || v > n)
        throw std::invalid_argument("set element out of range: " + tok);
      mask |= SetMask{1} << (v - 1);
    }
    if (any) sets.push_back(mask);
  }
  return SetSystem::make(n, std::move(sets));
}

inline std::string format_set_system(const SetSystem& sys) {
  std::ostringstream os;
  os << sys.n << "\n";
  for (SetMask a : sys.sets) {
    if (a == 0) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (int i = 0; i < sys.n; ++i)
      if (a >> i & 1) {
        os << (first ? "" : " ") << i + 1;
        first = false;
      }
    os << "\n";
  }
  return os.str();
}

// --- lattice exports ---------------------------------------------------------

inline json lattice_json(const GradedLattice& lat,
                         const std::vector<std::string>& names = {},
                         const EdgeLabelling* labels = nullptr) {
  json j;
  j["elements"] = json::array();
  for (int x = 0; x < lat.size(); ++x) {
    json e;
    e["id"] = x;
    if (!names.empty()) e["name"] = names[x];
    j["elements"].push_back(e);
  }
  j["ranks"] = json::array();
  for (int x = 0; x < lat.size(); ++x) j["ranks"].push_back(lat.rank(x));
  j["covers"] = json::array();
  for (std::size_t e = 0; e < lat.poset().covers().size(); ++e) {
    auto [x, y] = lat.poset().covers()[e];
    json edge = json::array({x, y});
    j["covers"].push_back(edge);
  }
  if (labels) {
    j["labels"] = json::array();
    for (int l : labels->labels) j["labels"].push_back(l + 1);
  }
  return j;
}

inline std::string lattice_dot(const GradedLattice& lat,
                               const std::vector<std::string>& names = {},
                               const EdgeLabelling* labels = nullptr) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 0; x < lat.size(); ++x) {
    os << "  n" << x << " [label=\"";
    os << (names.empty() ? std::to_string(x) : names[x]);
    os << "\"];\n";
  }
  for (int r = 0; r <= lat.height(); ++r) {
    os << "  { rank=same;";
    for (int x = 0; x < lat.size(); ++x)
      if (lat.rank(x) == r) os << " n" << x << ";";
    os << " }\n";
  }
  for (std::size_t e = 0; e < lat.poset().covers().size(); ++e) {
    auto [x, y] = lat.poset().covers()[e];
    os << "  n" << x << " -> n" << y;
    if (labels) os << " [label=\"" << labels->labels[e] + 1 << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::vector<std::string> sorting_order_names(const SortingOrder& so) {
  std::vector<std::string> names;
  names.reserve(so.family.sets.size());
  for (SetMask m : so.family.sets) {
    if (so.word.sys->rank() <= 9 && so.word.size() <= 24)
      names.push_back(placeholder_string(so.word, m));
    else
      names.push_back(format_index_set(Subword::from_mask(m).indices));
  }
  return names;
}

inline json sorting_order_json(const SortingOrder& so) {
  json j;
  std::vector<int> word1;
  for (int s : so.word.letters) word1.push_back(s + 1);
  j["word"] = word1;
  j["elements"] = json::array();
  for (int id = 0; id < so.size(); ++id) {
    Subword sw = so.sorted_word(id);
    json e;
    json idx = json::array();
    for (int i : sw.indices) idx.push_back(i + 1);
    e["index_set"] = idx;
    e["length"] = so.elements[id].length();
    json letters = json::array();
    for (int s : sw.induced_letters(so.word)) letters.push_back(s + 1);
    e["one_reduced_word"] = letters;
    j["elements"].push_back(e);
  }
  j["covers"] = json::array();
  for (auto [x, y] : so.lattice.poset().covers())
    j["covers"].push_back(json::array({x, y}));
  return j;
}

// Hasse diagram of the sorting order with the weak/Bruhat comparison baked
// into the edge styles: weak covers bold, sorting-only covers solid, and
// Bruhat covers missing from the sorting order dotted.
inline std::string sorting_order_dot(const SortingOrder& so) {
  const CoxeterSystem& sys = *so.word.sys;
  std::vector<std::string> names = sorting_order_names(so);
  std::ostringstream os;
  os << "digraph sorting_order {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 0; x < so.size(); ++x)
    os << "  n" << x << " [label=\"" << names[x] << "\"];\n";
  for (int r = 0; r <= so.lattice.height(); ++r) {
    os << "  { rank=same;";
    for (int x = 0; x < so.size(); ++x)
      if (so.lattice.rank(x) == r) os << " n" << x << ";";
    os << " }\n";
  }
  for (auto [x, y] : so.lattice.poset().covers()) {
    bool weak_cover = sys.weak_leq(so.elements[x], so.elements[y]);
    os << "  n" << x << " -> n" << y
       << (weak_cover ? " [style=bold]" : " [style=solid]") << ";\n";
  }
  for (auto [x, y] : missing_bruhat_covers(so))
    os << "  n" << x << " -> n" << y << " [style=dotted];\n";
  os << "}\n";
  return os.str();
}

inline json census_json(const Census& census) {
  json j;
  j["type"] = census.type;
  j["words"] = json::array();
  for (std::size_t i = 0; i < census.words.size(); ++i) {
    json w;
    std::vector<int> letters;
    for (int s : census.words[i].letters) letters.push_back(s + 1);
    w["word"] = letters;
    w["sortable_count"] = census.sortable_count[i];
    w["class_id"] = census.class_of[i];
    j["words"].push_back(w);
  }
  j["classes"] = json::array();
  for (std::size_t c = 0; c < census.representatives.size(); ++c) {
    json cls;
    cls["class_id"] = static_cast<int>(c);
    cls["representative"] = census.representatives[c];
    int sz = 0;
    for (int cl : census.class_of) sz += cl == static_cast<int>(c);
    cls["size"] = sz;
    j["classes"].push_back(cls);
  }
  return j;
}

}  // namespace coxsort::io
