#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cclosure/closure.hpp"
#include "cclosure/dfa.hpp"
#include "cclosure/errors.hpp"
#include "cclosure/regex.hpp"
#include "cclosure/resimple.hpp"
#include "cclosure/semilinear.hpp"
#include "cclosure/series.hpp"

namespace cclosure {

// An error raised inside one pipeline stage, tagged with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct PipelineOptions {
  std::optional<std::string> alphabet;
  SemilinearOptions semilinear;
  ResimpleLimits resimple;
  std::size_t max_states = kDefaultMaxStates;
  // Stop after the verdict (no resimple system, no automaton).
  bool decide_only = false;
};

enum class Verdict { Regular, NotRegular };

std::string to_string(Verdict v);

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct PipelineReport {
  std::string regex;
  std::string alphabet;
  std::string rational_expression;
  SemilinearSet semilinear;  // straight from the rational expression
  SemilinearSet semisimple;  // free, unambiguous, consistent
  RationalFraction fraction;  // P'/Q'
  RationalFraction reduced;   // P/Q, or the state where a division failed
  Verdict verdict = Verdict::NotRegular;
  std::optional<NatVector> witness;
  std::optional<ResimpleSystem> system;
  std::optional<Dfa> raw_dfa;
  std::optional<Dfa> min_dfa;
  std::vector<StageTiming> timings;
};

PipelineReport run_pipeline(std::string_view regex, const PipelineOptions& options = {});

// Words of length <= max_len whose letter counts match a word of L(regex).
std::set<std::string> brute_closure(std::string_view regex, std::size_t max_len,
                                    std::optional<std::string> alphabet = std::nullopt,
                                    std::size_t word_cap = kDefaultWordCap);

struct VerifyResult {
  bool passed = false;
  std::size_t words_checked = 0;
  std::optional<std::string> counterexample;
  bool counterexample_in_closure = false;
};

// Compares the automaton with the enumeration oracle on every word of
// length <= max_len. The report must be REGULAR.
VerifyResult verify(const PipelineReport& report, std::size_t max_len);
VerifyResult verify(std::string_view regex, std::size_t max_len, const PipelineOptions& options = {});

struct RenderOptions {
  bool dump_semilinear = false;
  bool dump_resimple = false;
  bool show_series = true;
  bool show_automaton = true;
};

std::string render_text(const PipelineReport& report, const RenderOptions& options = {});
std::string render_json(const PipelineReport& report, const RenderOptions& options = {});

}  // namespace cclosure
