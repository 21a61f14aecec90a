// cli.hpp --- command-line front end
//
// Subcommands: sort (sorted word of an element), poset (build and export a
// sorting order), check (run the invariant battery on a sorting order),
// sortables (count, enumerate, census), convexity (set-system checks on a
// file). Exit status is zero exactly when everything requested passed.

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxsort/io.hpp"
#include "coxsort/permutations.hpp"

namespace coxsort::cli {

struct RunConfig {
  std::string command;
  std::string type;         // preset name ("A4", "I2:4", ...)
  std::string matrix_file;  // alternative to a preset
  std::string word;
  std::string element;   // one-line permutation (type A presets)
  std::string subword;   // comma-separated 1-based indices into the word
  std::string cox_word;  // Coxeter word for sortables
  std::string file;      // set-system file for convexity
  std::string format = "text";
  std::string out_path;
  int element_cap = 5000;
  int truncate = 0;       // repeat the word cyclically to this length
  bool infinite = false;  // treat the word as a reduced prefix of an
                          // infinite sorting word
  bool census = false;
  bool enumerate = false;
  bool order_search = false;
  bool expect_antimatroid = false;
  bool expect_ss = false;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;
  std::string message;  // help or error text when config is absent
};

inline ParseOutcome parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"sorting orders on Coxeter groups"};
  app.require_subcommand(1);

  auto add_system = [&](CLI::App* cmd, bool need_word) {
    cmd->add_option("--type", cfg.type, "type preset, e.g. A3, B2, H3, I2:5");
    cmd->add_option("--matrix", cfg.matrix_file, "Coxeter matrix file");
    auto* w = cmd->add_option("--word", cfg.word,
                              "sorting word, 1-based (compact digits ok)");
    if (need_word) w->required();
    cmd->add_option("--cap", cfg.element_cap, "element enumeration cap");
  };

  CLI::App* sort = app.add_subcommand("sort", "sorted word of an element");
  add_system(sort, true);
  sort->add_option("--element", cfg.element,
                   "element in one-line permutation notation (type A)");
  sort->add_option("--subword", cfg.subword,
                   "element as indices into the word, e.g. 2,3,4");

  CLI::App* poset = app.add_subcommand("poset", "build and export a sorting order");
  add_system(poset, true);
  poset->add_option("--format", cfg.format, "text|json|dot");
  poset->add_option("--out", cfg.out_path, "write the artifact to a file");
  poset->add_option("--truncate", cfg.truncate,
                    "repeat the word cyclically to this length");
  poset->add_flag("--infinite", cfg.infinite,
                  "treat the word as a reduced prefix of an infinite word");

  CLI::App* check = app.add_subcommand("check", "invariant battery on a sorting order");
  add_system(check, true);

  CLI::App* sortables = app.add_subcommand("sortables", "Coxeter-sortable elements");
  add_system(sortables, false);
  sortables->add_option("--cox-word", cfg.cox_word,
                        "Coxeter word (default: generators in index order)");
  sortables->add_flag("--census", cfg.census,
                      "classify all Coxeter words by lattice isomorphism");
  sortables->add_flag("--enumerate", cfg.enumerate, "list the sortable elements");
  sortables->add_option("--format", cfg.format, "text|json|dot");
  sortables->add_option("--out", cfg.out_path, "write the artifact to a file");

  CLI::App* convexity = app.add_subcommand("convexity", "set-system checks on a file");
  convexity->add_option("file", cfg.file, "set-system file")->required();
  convexity->add_flag("--order-search", cfg.order_search,
                      "search all ground orders (n <= 8) for supersolvability");
  convexity->add_flag("--expect-antimatroid", cfg.expect_antimatroid,
                      "fail unless the system is an antimatroid");
  convexity->add_flag("--expect-ss", cfg.expect_ss,
                      "fail unless the system is a supersolvable antimatroid");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    return ParseOutcome{std::nullopt, code, os.str()};
  }
  for (CLI::App* cmd : {sort, poset, check, sortables, convexity})
    if (cmd->parsed()) cfg.command = cmd->get_name();
  return ParseOutcome{cfg, 0, ""};
}

namespace detail {

inline std::shared_ptr<const CoxeterSystem> make_system(const RunConfig& cfg) {
  if (!cfg.type.empty() && !cfg.matrix_file.empty())
    throw std::invalid_argument("give either --type or --matrix, not both");
  if (!cfg.type.empty())
    return std::make_shared<const CoxeterSystem>(io::preset_matrix(cfg.type));
  if (!cfg.matrix_file.empty()) {
    std::ifstream in(cfg.matrix_file);
    if (!in) throw std::invalid_argument("cannot open " + cfg.matrix_file);
    return std::make_shared<const CoxeterSystem>(io::parse_matrix(in));
  }
  throw std::invalid_argument("a system is required: --type or --matrix");
}

inline SortingWord make_word(const RunConfig& cfg,
                             std::shared_ptr<const CoxeterSystem> sys) {
  std::vector<int> letters = io::parse_word(cfg.word, sys->rank());
  if (cfg.truncate > 0) {
    if (letters.empty())
      throw std::invalid_argument("--truncate needs a nonempty word");
    std::vector<int> repeated;
    for (int i = 0; i < cfg.truncate; ++i)
      repeated.push_back(letters[i % letters.size()]);
    letters = std::move(repeated);
  }
  return SortingWord(std::move(sys), std::move(letters));
}

inline GroupElement element_from_config(const RunConfig& cfg,
                                        const SortingWord& w) {
  const auto& sys = w.sys;
  if (!cfg.element.empty() && !cfg.subword.empty())
    throw std::invalid_argument("give either --element or --subword");
  if (!cfg.subword.empty()) {
    std::vector<int> idx = io::parse_index_set(cfg.subword);
    for (int i : idx)
      if (i < 0 || i >= w.size())
        throw std::invalid_argument("subword index out of range");
    return sys->evaluate_word(Subword{idx}.induced_letters(w));
  }
  if (!cfg.element.empty()) {
    if (cfg.type.empty() || cfg.type[0] != 'A')
      throw std::invalid_argument(
          "--element needs a type A preset; use --subword otherwise");
    Permutation perm = Permutation::parse_one_line(cfg.element);
    if (perm.size() != sys->rank() + 1)
      throw std::invalid_argument("permutation size does not match the rank");
    return sys->evaluate_word(perm.reduced_word());
  }
  throw std::invalid_argument("an element is required: --element or --subword");
}

inline void emit(const RunConfig& cfg, const std::string& artifact,
                 std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << artifact;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::invalid_argument("cannot write " + cfg.out_path);
  f << artifact;
}

struct CheckPrinter {
  std::ostream& out;
  bool all_passed = true;

  void line(const std::string& name, bool pass, const std::string& info = "") {
    out << (pass ? "PASS " : "FAIL ") << name;
    if (!info.empty()) out << " (" << info << ")";
    out << "\n";
    all_passed &= pass;
  }

  void info(const std::string& name, const std::string& value) {
    out << "info " << name << ": " << value << "\n";
  }
};

inline int run_sort(const RunConfig& cfg, std::ostream& out) {
  SortingWord w = make_word(cfg, make_system(cfg));
  GroupElement u = element_from_config(cfg, w);
  Subword sorted = sort_element(w, u);
  out << io::format_index_set(sorted.indices) << "\n";
  out << io::format_word(sorted.induced_letters(w)) << "\n";
  return 0;
}

inline int run_poset(const RunConfig& cfg, std::ostream& out) {
  SortingWord w = make_word(cfg, make_system(cfg));
  SortingOrderOptions opts;
  opts.element_cap = cfg.element_cap;
  CheckPrinter p{out};
  SortingOrder so = [&] {
    if (!cfg.infinite) return build_sorting_order(w, opts);
    TruncationReport rep = build_truncated_infinite(w, opts);
    p.line("lattice", rep.lattice_ok);
    p.line("intervals join-distributive", rep.intervals_join_distributive);
    p.line("intervals supersolvable", rep.intervals_supersolvable);
    return rep.order;
  }();
  p.info("elements", std::to_string(so.size()));
  p.info("covers", std::to_string(so.lattice.poset().covers().size()));
  p.info("height", std::to_string(so.lattice.height()));
  if (cfg.format == "json") {
    emit(cfg, io::sorting_order_json(so).dump(2) + "\n", out);
  } else if (cfg.format == "dot") {
    emit(cfg, io::sorting_order_dot(so), out);
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (int id = 0; id < so.size(); ++id) {
      Subword sw = so.sorted_word(id);
      os << io::format_index_set(sw.indices) << " "
         << io::format_word(sw.induced_letters(so.word)) << "\n";
    }
    emit(cfg, os.str(), out);
  } else {
    throw std::invalid_argument("unknown format: " + cfg.format);
  }
  return p.all_passed ? 0 : 1;
}

inline int run_check(const RunConfig& cfg, std::ostream& out) {
  SortingWord w = make_word(cfg, make_system(cfg));
  SortingOrderOptions opts;
  opts.element_cap = cfg.element_cap;
  SortingOrder so = build_sorting_order(w, opts);
  CheckPrinter p{out};
  p.info("elements", std::to_string(so.size()));

  AntimatroidReport am = is_antimatroid(so.family);
  p.line("antimatroid", am.all() && am.flags_agree(),
         "augmentation/union/local flags agree");
  p.line("supersolvable antimatroid", is_supersolvable_antimatroid(so.family));

  JoinDistributivityReport jd = is_join_distributive(so.lattice);
  p.line("join-distributive", jd.all() && jd.flags_agree(),
         "three conditions agree");
  p.line("Sn EL-labelling (index order)",
         is_sn_el_labelling(so.lattice, so.lattice.natural_labels()));
  p.line("supersolvable lattice", is_supersolvable(so.lattice));

  OrderComparison cmp = compare_orders(so);
  p.line("weak order contained in sorting order", cmp.weak_subset);
  p.line("sorting order contained in Bruhat order", cmp.bruhat_superset);
  p.info("cover edges weak/sorting/Bruhat",
         std::to_string(cmp.weak_covers) + "/" +
             std::to_string(cmp.sorting_covers) + "/" +
             std::to_string(cmp.bruhat_covers));
  p.info("containments strict",
         std::string(cmp.strict_below ? "yes" : "no") + "/" +
             (cmp.strict_above ? "yes" : "no"));

  p.line("maximal lattice", verify_maximality(so));
  return p.all_passed ? 0 : 1;
}

inline int run_sortables(const RunConfig& cfg, std::ostream& out) {
  auto sys = make_system(cfg);
  CheckPrinter p{out};
  if (cfg.census) {
    Census census = sortable_census(sys, cfg.element_cap);
    census.type = cfg.type;
    p.info("words", std::to_string(census.words.size()));
    p.info("classes", std::to_string(census.representatives.size()));
    if (cfg.format == "json") {
      emit(cfg, io::census_json(census).dump(2) + "\n", out);
    } else if (cfg.format == "dot") {
      std::ostringstream os;
      for (int rep : census.representatives)
        os << io::lattice_dot(census.lattices[rep].lattice);
      emit(cfg, os.str(), out);
    } else {
      std::ostringstream os;
      for (std::size_t i = 0; i < census.words.size(); ++i) {
        std::vector<int> letters = census.words[i].letters;
        os << io::format_word(letters) << " sortables "
           << census.sortable_count[i] << " class " << census.class_of[i]
           << "\n";
      }
      emit(cfg, os.str(), out);
    }
    return 0;
  }

  std::vector<int> letters = cfg.cox_word.empty()
                                 ? identity_order(sys->rank())
                                 : io::parse_word(cfg.cox_word, sys->rank());
  CoxeterWord c = CoxeterWord::make(*sys, letters);
  SortableLattice sl = sortable_lattice(sys, c, cfg.element_cap);
  p.info("sortable elements", std::to_string(sl.lattice.size()));
  if (!cfg.type.empty()) {
    bool known = true;
    Int cat = 0;
    try {
      cat = catalan_number(cfg.type);
    } catch (const std::invalid_argument&) {
      known = false;
    }
    if (known)
      p.line("count equals Coxeter-Catalan number",
             Int(sl.lattice.size()) == cat, "Cat = " + cat.str());
  }
  p.line("join-distributive", is_join_distributive(sl.lattice).all());
  SortableObservations obs = observe_sortable_restriction(sys, sl);
  p.info("coincides with Bruhat on sortables",
         obs.bruhat_coincides ? "yes" : "no");
  p.info("supersolvable", obs.supersolvable ? "yes" : "no");
  if (cfg.enumerate) {
    std::ostringstream os;
    for (int id = 0; id < sl.lattice.size(); ++id) {
      Subword sw = Subword::from_mask(sl.family.sets[id]);
      std::vector<int> word;
      for (int i : sw.indices) word.push_back(c.letters[i % sys->rank()]);
      os << io::format_index_set(sw.indices) << " " << io::format_word(word)
         << "\n";
    }
    emit(cfg, os.str(), out);
  }
  if (cfg.format == "dot") emit(cfg, io::lattice_dot(sl.lattice), out);
  if (cfg.format == "json") {
    EdgeLabelling el = sl.lattice.natural_labels();
    emit(cfg, io::lattice_json(sl.lattice, {}, &el).dump(2) + "\n", out);
  }
  return p.all_passed ? 0 : 1;
}

inline int run_convexity(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.file);
  if (!in) throw std::invalid_argument("cannot open " + cfg.file);
  SetSystem sys = io::parse_set_system(in);
  CheckPrinter p{out};
  p.info("ground set", std::to_string(sys.n));
  p.info("feasible sets", std::to_string(sys.sets.size()));

  bool accessible = is_accessible(sys);
  p.info("accessible", accessible ? "yes" : "no");
  AntimatroidReport am = is_antimatroid(sys);
  p.info("antimatroid (augmentation/union/local)",
         std::string(am.augmentation ? "yes" : "no") + "/" +
             (am.union_closed ? "yes" : "no") + "/" +
             (am.local ? "yes" : "no"));
  if (accessible)
    p.line("antimatroid conditions agree", am.flags_agree());

  bool ss = is_supersolvable_antimatroid(sys);
  p.info("supersolvable antimatroid (given order)", ss ? "yes" : "no");
  if (cfg.order_search) {
    auto witness = supersolvable_order_search(sys);
    if (witness) {
      std::ostringstream os;
      for (std::size_t i = 0; i < witness->size(); ++i)
        os << (i ? " " : "") << (*witness)[i] + 1;
      p.info("supersolvable under order", os.str());
    } else {
      p.info("supersolvable under order", "none");
    }
  }

  if (am.all()) {
    GradedLattice lat = build_lattice_from_family(sys);
    JoinDistributivityReport jd = is_join_distributive(lat);
    p.line("feasible lattice join-distributive", jd.all() && jd.flags_agree());
    p.line("supersolvable antimatroid iff Sn EL natural labelling",
           ss == is_sn_el_labelling(lat, lat.natural_labels()));
  }

  SetSystem comp = complement_system(sys);
  bool ic = is_intersection_closed(comp);
  bool has_empty = comp.contains(0), has_full = comp.contains(comp.full());
  p.info("complement intersection-closed", ic ? "yes" : "no");
  if (ic && has_empty && has_full) {
    bool ae = satisfies_antiexchange(ClosureOperator(comp));
    p.info("complement closure anti-exchange", ae ? "yes" : "no");
    if (accessible && sys.union_of_all() == sys.full())
      p.line("antimatroid iff complement is a convex geometry",
             am.all() == ae);
  }

  if (cfg.expect_antimatroid) p.line("expected: antimatroid", am.all());
  if (cfg.expect_ss) p.line("expected: supersolvable antimatroid", ss);
  return p.all_passed ? 0 : 1;
}

}  // namespace detail

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "sort") return detail::run_sort(cfg, out);
    if (cfg.command == "poset") return detail::run_poset(cfg, out);
    if (cfg.command == "check") return detail::run_check(cfg, out);
    if (cfg.command == "sortables") return detail::run_sortables(cfg, out);
    if (cfg.command == "convexity") return detail::run_convexity(cfg, out);
    err << "error: unknown command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  ParseOutcome parsed = parse_config(args);
  if (!parsed.config) {
    (parsed.exit_code == 0 ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return dispatch(*parsed.config, out, err);
}

}  // namespace coxsort::cli
