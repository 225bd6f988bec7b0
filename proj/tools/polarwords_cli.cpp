// polarwords: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 argument outside a computational guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarwords/acceptance.hpp"
#include "polarwords/bijection.hpp"
#include "polarwords/errors.hpp"
#include "polarwords/language.hpp"
#include "polarwords/nset.hpp"
#include "polarwords/polarspace.hpp"

namespace pw = polarwords;
using nlohmann::json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::optional<int> case_filter;
  std::string format = "text";
  std::string out;
  int threads = 1;
  int x0 = 0;
  bool all = false;
  bool verify = false;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " is not available here (choose " + list + ")");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string lines_of(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += r + "\n";
  return s;
}

std::string cmd_enumerate_words(const Options& o) {
  require_format(o, {"text", "csv", "json"});
  std::vector<std::string> rows;
  json words = json::array();
  if (o.format == "csv") rows.push_back("word,case");
  for (const pw::Word& w : pw::enumerate_words(o.n)) {
    const int c = pw::classify_word(w).number;
    if (o.case_filter && *o.case_filter != c) continue;
    if (o.format == "csv")
      rows.push_back(w.to_string() + "," + std::to_string(c));
    else
      rows.push_back(w.to_string());
    words.push_back({{"word", w.to_string()}, {"case", c}});
  }
  if (o.format == "json") return dump({{"n", o.n}, {"words", words}});
  return lines_of(rows);
}

std::string cmd_enumerate_subspaces(const Options& o) {
  require_format(o, {"text", "csv", "json"});
  if (o.all && o.case_filter) throw UsageError("--case applies to N^n only and cannot be combined with --all");
  std::vector<pw::Gf2Subspace> list;
  if (o.all) {
    pw::check_guard("enumerate-subspaces --all", o.n, 1, 8);
    list = pw::enumerate_subspaces(o.n);
  } else {
    list = pw::enumerate_N(o.n, o.threads);
  }
  std::vector<std::string> rows;
  json docs = json::array();
  if (o.format == "csv") rows.push_back("subspace,dim,case,subcase");
  for (const pw::Gf2Subspace& v : list) {
    std::optional<pw::CaseLabel> label;
    if (!o.all || pw::in_N(v)) label = pw::classify_subspace(v);
    if (o.case_filter && label->number != *o.case_filter) continue;
    const std::string number = label ? std::to_string(label->number) : "";
    const char sub = label ? pw::subcase_char(label->subcase) : '\0';
    const std::string subcase = sub ? std::string(1, sub) : "";
    if (o.format == "csv")
      rows.push_back(v.to_string() + "," + std::to_string(v.dim()) + "," + number + "," + subcase);
    else
      rows.push_back(v.to_string());
    json basis = json::array();
    for (const auto& r : v.basis()) basis.push_back(r.to_string());
    json entry = {{"basis", basis}, {"dim", v.dim()}};
    entry["case"] = label ? json(label->number) : json(nullptr);
    entry["subcase"] = sub ? json(subcase) : json(nullptr);
    docs.push_back(entry);
  }
  if (o.format == "json") return dump({{"n", o.n}, {"subspaces", docs}});
  return lines_of(rows);
}

std::string cmd_strata(const Options& o) {
  require_format(o, {"text", "json"});
  const pw::PolarGeometry geo = pw::build_geometry(o.n, o.threads);
  pw::check_guard("strata --x0", o.x0, 0, static_cast<long long>(geo.points.size()) - 1);
  const pw::StrataReport rep = pw::strata(geo, o.x0);
  if (o.format == "json") {
    json levels = json::array();
    for (std::size_t k = 0; k < rep.strata.size(); ++k)
      levels.push_back({{"k", k}, {"points", rep.strata[k]}, {"components", rep.components[k]}});
    return dump({{"n", o.n},
                 {"x0", o.x0},
                 {"x0_basis", geo.points[o.x0].to_string()},
                 {"strata", levels},
                 {"distance_matches", rep.distance_matches},
                 {"line_fact", rep.line_fact},
                 {"component_bijection", rep.component_bijection}});
  }
  std::vector<std::string> rows{"x0 " + std::to_string(o.x0) + " " + geo.points[o.x0].to_string()};
  for (std::size_t k = 0; k < rep.strata.size(); ++k)
    rows.push_back("k=" + std::to_string(k) + " points=" + std::to_string(rep.strata[k].size()) +
                   " components=" + std::to_string(rep.components[k].size()));
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  rows.push_back("distance_matches " + yes(rep.distance_matches));
  rows.push_back("line_fact " + yes(rep.line_fact));
  rows.push_back("component_bijection " + yes(rep.component_bijection));
  return lines_of(rows);
}

std::string cmd_bijection(const Options& o, int& status) {
  if (o.verify) {
    require_format(o, {"text", "json"});
    const pw::BijectionReport rep = pw::verify_bijection(o.n, o.threads);
    if (!rep.passed()) status = kVerifyFailed;
    if (o.format == "json")
      return dump({{"n", rep.n},
                   {"words", rep.words},
                   {"subspaces", rep.subspaces},
                   {"matched", rep.matched},
                   {"injective", rep.injective},
                   {"surjective", rep.surjective},
                   {"inverse_consistent", rep.inverse_consistent},
                   {"case_compatible", rep.case_compatible},
                   {"case_counts", rep.case_counts},
                   {"counterexamples", rep.counterexamples},
                   {"passed", rep.passed()}});
    std::vector<std::string> rows{rep.summary()};
    for (const auto& c : rep.counterexamples) rows.push_back("  " + c);
    return lines_of(rows);
  }
  require_format(o, {"text", "csv", "json"});
  const pw::BijectionTable t = pw::build_table(o.n);
  std::vector<std::string> rows;
  json entries = json::array();
  if (o.format == "csv") rows.push_back("word,case,subspace_basis");
  for (const pw::Word& w : pw::enumerate_words(o.n)) {
    const pw::Gf2Subspace& v = t.forward.at(w);
    const int c = pw::classify_word(w).number;
    if (o.case_filter && *o.case_filter != c) continue;
    if (o.format == "csv")
      rows.push_back(w.to_string() + "," + std::to_string(c) + "," + v.to_string());
    else
      rows.push_back(w.to_string() + " " + v.to_string());
    entries.push_back({{"word", w.to_string()}, {"case", c}, {"subspace_basis", v.to_string()}});
  }
  if (o.format == "json") return dump({{"n", o.n}, {"entries", entries}});
  return lines_of(rows);
}

std::string cmd_verify_all(const Options& o, int& status) {
  require_format(o, {"text"});
  std::string text;
  bool all = true;
  pw::run_all_criteria(o.threads, [&](const pw::CriterionResult& r) {
    text += r.line() + "\n";
    if (o.out.empty()) std::cout << r.line() << std::endl;
    all = all && r.passed();
  });
  const std::string last = all ? "all criteria passed\n" : "some criteria FAILED\n";
  if (o.out.empty()) std::cout << last;
  if (!all) status = kVerifyFailed;
  return o.out.empty() ? std::string() : text + last;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words, subspaces and the binary symplectic polar space"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_format) {
    sub->add_option("--out,-o", o.out, "Write output to this file instead of stdout");
    sub->add_option("--threads,-j", o.threads, "Worker threads")->check(CLI::Range(1, 256));
    if (with_format) sub->add_option("--format,-f", o.format, "Output format");
  };
  auto add_n = [&o](CLI::App* sub, const char* help) { sub->add_option("n", o.n, help)->required(); };

  auto* g = app.add_subcommand("g", "Print g(n) = (2^n+1)(2^(n-1)+1)/3");
  add_n(g, "0 <= n <= 32");
  add_common(g, false);

  auto* cw = app.add_subcommand("count-words", "Count L_n by dynamic programming");
  add_n(cw, "1 <= n <= 32");
  add_common(cw, false);

  auto* ew = app.add_subcommand("enumerate-words", "List L_n in lexicographic order");
  add_n(ew, "1 <= n <= 14");
  ew->add_option("--case", o.case_filter, "Only words of this case")->check(CLI::Range(1, 7));
  add_common(ew, true);

  auto* es = app.add_subcommand("enumerate-subspaces", "List N^n, or every subspace with --all");
  add_n(es, "1 <= n <= 8");
  es->add_option("--case", o.case_filter, "Only members of N^n in this case")->check(CLI::Range(1, 7));
  es->add_flag("--all", o.all, "List every subspace of F_2^n");
  add_common(es, true);

  auto* ud = app.add_subcommand("udim", "Universal embedding dimension of the rank-n polar space");
  add_n(ud, "1 <= n <= 4");
  add_common(ud, false);

  auto* st = app.add_subcommand("strata", "Distance strata around a base point");
  add_n(st, "1 <= n <= 4");
  st->add_option("--x0", o.x0, "Base point index");
  add_common(st, true);

  auto* bj = app.add_subcommand("bijection", "Word-to-subspace table, or an exhaustive check with --verify");
  add_n(bj, "1 <= n <= 10 (table), 1 <= n <= 7 (--verify)");
  bj->add_option("--case", o.case_filter, "Only words of this case")->check(CLI::Range(1, 7));
  bj->add_flag("--verify", o.verify, "Check bijectivity, inverse and case compatibility");
  add_common(bj, true);

  auto* ex = app.add_subcommand("export-incidence", "Point-line incidence of the polar space");
  add_n(ex, "1 <= n <= 4");
  add_common(ex, true);

  auto* va = app.add_subcommand("verify-all", "Run every acceptance criterion");
  add_common(va, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  int status = 0;
  try {
    std::string text;
    if (g->parsed()) {
      text = std::to_string(pw::g(o.n)) + "\n";
    } else if (cw->parsed()) {
      text = std::to_string(pw::count_words(o.n)) + "\n";
    } else if (ew->parsed()) {
      text = cmd_enumerate_words(o);
    } else if (es->parsed()) {
      text = cmd_enumerate_subspaces(o);
    } else if (ud->parsed()) {
      text = std::to_string(pw::udim(o.n, o.threads)) + "\n";
    } else if (st->parsed()) {
      text = cmd_strata(o);
    } else if (bj->parsed()) {
      text = cmd_bijection(o, status);
    } else if (ex->parsed()) {
      if (o.format == "text") throw UsageError("export-incidence needs --format dot, json or csv");
      pw::IncidenceFormat fmt;
      try {
        fmt = pw::parse_incidence_format(o.format);
      } catch (const pw::PreconditionError& e) {
        throw UsageError(e.what());
      }
      text = pw::export_incidence(pw::build_geometry(o.n, o.threads), fmt);
    } else if (va->parsed()) {
      text = cmd_verify_all(o, status);
      if (text.empty()) return status;
    }
    emit(o, text);
  } catch (const pw::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return status;
}
