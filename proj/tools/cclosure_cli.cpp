// Command-line front end: decide regularity of the commutative closure of a
// regular expression and build its automaton.
//
// Exit status: 0 REGULAR (or a passing check), 2 NOT_REGULAR, 1 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cclosure/pipeline.hpp"
#include "json.hpp"

using namespace cclosure;

namespace {

struct Common {
  std::string regex;
  std::string alphabet;
  bool dump_semilinear = false;
  bool dump_resimple = false;
  std::string format = "text";

  PipelineOptions options() const {
    PipelineOptions o;
    if (!alphabet.empty()) o.alphabet = alphabet;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("regex", c.regex, "regular expression")->required();
  cmd->add_option("--alphabet", c.alphabet, "alphabet letters (default: letters of the regex)");
  cmd->add_flag("--dump-semilinear", c.dump_semilinear, "print the semilinear and semi-simple forms");
  cmd->add_flag("--dump-resimple", c.dump_resimple, "print the resimple system");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << content;
}

void print_report(const PipelineReport& r, const Common& c, RenderOptions ro) {
  ro.dump_semilinear = c.dump_semilinear;
  ro.dump_resimple = c.dump_resimple;
  std::cout << (c.format == "json" ? render_json(r, ro) : render_text(r, ro));
}

int exit_code(const PipelineReport& r) { return r.verdict == Verdict::Regular ? 0 : 2; }

std::string show_word(const std::string& w) { return w.empty() ? "_" : w; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative closure of regular languages"};
  app.require_subcommand(1);

  Common build_c, series_c, decide_c, oracle_c, verify_c;
  bool minimal = false;
  std::string dot_path, json_path;
  std::size_t oracle_len = 6, verify_len = 8;

  auto* build = app.add_subcommand("build", "build the closure automaton");
  add_common(build, build_c);
  build->add_flag("--min", minimal, "minimize the automaton");
  build->add_option("--dot", dot_path, "write the automaton as Graphviz DOT");
  build->add_option("--json", json_path, "write the automaton as JSON");

  auto* series = app.add_subcommand("series", "print the characteristic series");
  add_common(series, series_c);

  auto* decide = app.add_subcommand("decide", "decide whether the closure is regular");
  add_common(decide, decide_c);

  auto* oracle = app.add_subcommand("oracle", "list closure words by enumeration");
  add_common(oracle, oracle_c);
  oracle->add_option("--max-len", oracle_len, "maximal word length");

  auto* verify_cmd = app.add_subcommand("verify", "compare the automaton with the enumeration oracle");
  add_common(verify_cmd, verify_c);
  verify_cmd->add_option("--max-len", verify_len, "maximal word length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      PipelineReport r = run_pipeline(build_c.regex, build_c.options());
      if (r.verdict == Verdict::Regular) {
        const Dfa& d = minimal ? *r.min_dfa : *r.raw_dfa;
        if (!minimal) r.min_dfa.reset();
        if (!dot_path.empty()) write_file(dot_path, export_dot(d));
        if (!json_path.empty()) write_file(json_path, export_json(d));
      }
      print_report(r, build_c, {});
      return exit_code(r);
    }
    if (*series) {
      PipelineOptions o = series_c.options();
      o.decide_only = true;
      PipelineReport r = run_pipeline(series_c.regex, o);
      print_report(r, series_c, {.show_automaton = false});
      return exit_code(r);
    }
    if (*decide) {
      PipelineOptions o = decide_c.options();
      o.decide_only = true;
      PipelineReport r = run_pipeline(decide_c.regex, o);
      print_report(r, decide_c, {.show_series = false, .show_automaton = false});
      return exit_code(r);
    }
    if (*oracle) {
      std::optional<std::string> alpha;
      if (!oracle_c.alphabet.empty()) alpha = oracle_c.alphabet;
      auto words = brute_closure(oracle_c.regex, oracle_len, alpha);
      std::vector<std::string> sorted(words.begin(), words.end());
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
      if (oracle_c.format == "json") {
        std::cout << nlohmann::json(sorted).dump(2) << "\n";
      } else {
        for (const auto& w : sorted) std::cout << show_word(w) << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      PipelineReport r = run_pipeline(verify_c.regex, verify_c.options());
      if (r.verdict != Verdict::Regular) {
        print_report(r, verify_c, {.show_automaton = false});
        std::cerr << "verify: closure is not regular, nothing to compare\n";
        return 2;
      }
      VerifyResult v = verify(r, verify_len);
      if (verify_c.format == "json") {
        nlohmann::json j{{"regex", r.regex}, {"max_len", verify_len}, {"words", v.words_checked}, {"passed", v.passed}};
        if (v.counterexample) j["counterexample"] = *v.counterexample;
        std::cout << j.dump(2) << "\n";
      } else {
        print_report(r, verify_c, {});
        if (v.passed)
          std::cout << "verify: pass (" << v.words_checked << " words up to length " << verify_len << ")\n";
        else
          std::cout << "verify: FAIL at " << show_word(*v.counterexample) << " (oracle says "
                    << (v.counterexample_in_closure ? "in" : "not in") << " closure)\n";
      }
      return v.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
