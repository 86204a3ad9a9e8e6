#include "cclosure/pipeline.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cclosure {

std::string to_string(Verdict v) { return v == Verdict::Regular ? "REGULAR" : "NOT_REGULAR"; }

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

  template <class F>
  auto run(const std::string& stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(f())>) {
        f();
        record(stage, start);
      } else {
        auto r = f();
        record(stage, start);
        return r;
      }
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(stage, e.what());
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    out_.push_back({stage, d.count()});
  }

  std::vector<StageTiming>& out_;
};

std::set<NatVector> parikh_images(const RegexAst& ast, std::size_t max_len, std::size_t word_cap) {
  std::set<NatVector> out;
  for (const auto& w : enumerate_language(ast, max_len, word_cap)) out.insert(parikh_vector(w, ast.alphabet()));
  return out;
}

}  // namespace

PipelineReport run_pipeline(std::string_view regex, const PipelineOptions& options) {
  PipelineReport r;
  r.regex = std::string(regex);
  StageClock clock(r.timings);

  RegexAst ast = clock.run("parse", [&] { return parse_regex(regex, options.alphabet); });
  r.alphabet = ast.alphabet();
  RationalExpr expr = clock.run("parikh", [&] { return parikh_expression(ast); });
  r.rational_expression = to_string(expr);
  r.semilinear = clock.run("semilinear", [&] { return to_semilinear(expr); });

  SemilinearSet s = clock.run("make_free", [&] { return make_free(r.semilinear, options.semilinear); });
  s = clock.run("disambiguate", [&] { return disambiguate(s, options.semilinear); });
  s = clock.run("make_consistent", [&] {
    // Consistency expansion keeps terms disjoint, but the set is
    // disambiguated again anyway; repeat until both properties hold.
    SemilinearSet cur = make_consistent(s);
    for (int round = 0; round < 8; ++round) {
      cur = disambiguate(cur, options.semilinear);
      if (is_consistent(cur)) {
        cur.consistent = Check::Yes;
        return cur;
      }
      cur = make_consistent(cur);
    }
    throw ResourceLimit("consistency and disambiguation did not stabilise");
  });
  r.semisimple = s;

  r.fraction = clock.run("char_series", [&] { return char_series(s); });
  Decision d = clock.run("decide", [&] { return simplify_and_decide(r.fraction); });
  r.reduced = d.fraction;
  r.witness = d.witness;
  r.verdict = d.recognizable ? Verdict::Regular : Verdict::NotRegular;
  if (!d.recognizable || options.decide_only) return r;

  r.system = clock.run("resimple",
                       [&] { return build_system(r.reduced.numerator, r.reduced.denominator, options.resimple); });
  r.raw_dfa = clock.run("automaton", [&] { return build_closure_dfa(*r.system, r.alphabet, options.max_states); });
  r.min_dfa = clock.run("minimize", [&] { return minimize(*r.raw_dfa); });
  return r;
}

std::set<std::string> brute_closure(std::string_view regex, std::size_t max_len, std::optional<std::string> alphabet,
                                    std::size_t word_cap) {
  RegexAst ast = parse_regex(regex, std::move(alphabet));
  std::set<std::string> out;
  for (const auto& v : parikh_images(ast, max_len, word_cap)) {
    // Distinct permutations of the sorted word with these counts.
    std::string w;
    for (std::size_t j = 0; j < v.size(); ++j) w.append(static_cast<std::size_t>(v[j]), ast.alphabet()[j]);
    do {
      out.insert(w);
      if (out.size() > word_cap) throw ResourceLimit("closure enumeration exceeded the word cap");
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

VerifyResult verify(const PipelineReport& report, std::size_t max_len) {
  if (report.verdict != Verdict::Regular || !report.raw_dfa)
    throw InvariantError("verify needs a REGULAR pipeline result with an automaton");
  const Dfa& dfa = report.min_dfa ? *report.min_dfa : *report.raw_dfa;
  RegexAst ast = parse_regex(report.regex, report.alphabet);
  auto images = parikh_images(ast, max_len, kDefaultWordCap);
  VerifyResult v;
  for (const auto& w : all_words(report.alphabet, max_len)) {
    ++v.words_checked;
    bool expected = images.count(parikh_vector(w, report.alphabet)) > 0;
    if (accepts(dfa, w) != expected) {
      v.counterexample = w;
      v.counterexample_in_closure = expected;
      return v;
    }
  }
  v.passed = true;
  return v;
}

VerifyResult verify(std::string_view regex, std::size_t max_len, const PipelineOptions& options) {
  return verify(run_pipeline(regex, options), max_len);
}

std::string render_text(const PipelineReport& r, const RenderOptions& o) {
  std::ostringstream out;
  out << "regex: " << r.regex << "\n";
  out << "alphabet: " << (r.alphabet.empty() ? "(empty)" : r.alphabet) << "\n";
  if (o.dump_semilinear) {
    out << "rational expression: " << r.rational_expression << "\n";
    out << "semilinear: " << to_string(r.semilinear) << "\n";
    out << "semi-simple: " << to_string(r.semisimple) << "\n";
  }
  if (o.show_series) {
    out << "series: " << to_string(r.fraction) << "\n";
    if (r.verdict == Verdict::Regular) out << "reduced: " << to_string(r.reduced) << "\n";
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
  if (r.witness) out << "witness: (1 - " << monomial_string(*r.witness) << ") " << to_string(*r.witness) << "\n";
  if (o.dump_resimple && r.system) out << "resimple:\n" << to_string(*r.system);
  if (o.show_automaton && r.raw_dfa) {
    out << "states: " << r.raw_dfa->size();
    if (r.min_dfa) out << " (minimal " << r.min_dfa->size() << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_json(const PipelineReport& r, const RenderOptions& o) {
  nlohmann::json j;
  j["regex"] = r.regex;
  j["alphabet"] = r.alphabet;
  if (o.dump_semilinear) {
    j["rational_expression"] = r.rational_expression;
    j["semilinear"] = to_string(r.semilinear);
    j["semisimple"] = to_string(r.semisimple);
  }
  if (o.show_series) {
    j["series"] = to_string(r.fraction);
    if (r.verdict == Verdict::Regular) {
      j["reduced"] = {{"numerator", to_string(r.reduced.numerator)},
                      {"denominator", to_string(r.reduced.denominator)},
                      {"text", to_string(r.reduced)}};
    }
  }
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = r.witness->components();
  if (o.dump_resimple && r.system) {
    nlohmann::json sys;
    sys["periods"] = r.system->periods();
    sys["terms"] = nlohmann::json::array();
    for (const auto& t : r.system->terms()) sys["terms"].push_back({{"mu", t.mu}, {"offset", t.offset.components()}});
    sys["good_classes"] = nlohmann::json::array();
    for (const auto& h : r.system->good_classes()) {
      std::vector<std::size_t> members;
      for (auto i = h.find_first(); i != ClassPattern::npos; i = h.find_next(i)) members.push_back(i + 1);
      sys["good_classes"].push_back(members);
    }
    j["resimple"] = sys;
  }
  if (o.show_automaton && r.raw_dfa) {
    j["states"] = {{"raw", r.raw_dfa->size()}};
    if (r.min_dfa) j["states"]["minimal"] = r.min_dfa->size();
  }
  nlohmann::json t = nlohmann::json::object();
  for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
  j["timings_ms"] = t;
  return j.dump(2) + "\n";
}

}  // namespace cclosure
