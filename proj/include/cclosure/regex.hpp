#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "cclosure/nat_vector.hpp"
#include "cclosure/rational_expr.hpp"

namespace cclosure {

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
  enum class Kind { EmptySet, EmptyWord, Letter, Union, Concat, Star };

  Kind kind;
  char letter = 0;
  RegexPtr left, right;  // Star uses left only

  static RegexPtr empty_set();
  static RegexPtr empty_word();
  static RegexPtr make_letter(char c);
  static RegexPtr make_union(RegexPtr l, RegexPtr r);
  static RegexPtr make_concat(RegexPtr l, RegexPtr r);
  static RegexPtr make_star(RegexPtr e);
};

bool structurally_equal(const RegexNode& a, const RegexNode& b);

// A syntax tree together with the alphabet that fixes coordinate order.
class RegexAst {
 public:
  // Throws AlphabetError if the tree uses a letter outside `alphabet` or the
  // alphabet is not a set of lowercase letters. The alphabet is sorted.
  RegexAst(RegexPtr root, std::string alphabet);

  const RegexNode& root() const { return *root_; }
  const RegexPtr& root_ptr() const { return root_; }
  const std::string& alphabet() const { return alphabet_; }
  std::size_t dimension() const { return alphabet_.size(); }
  std::size_t coordinate(char letter) const;

 private:
  RegexPtr root_;
  std::string alphabet_;
};

// Grammar: lowercase letters, `|`, juxtaposition, postfix `*`, parentheses,
// `_` for the empty word and `#` for the empty set. Blanks are ignored.
RegexAst parse_regex(std::string_view text, std::optional<std::string> alphabet = std::nullopt);

// Canonical text with the fewest parentheses that reparse to the same tree.
std::string to_string(const RegexAst& ast);
std::string to_string(const RegexNode& node);

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

// Words of L(ast) of length <= max_len. Throws ResourceLimit if any
// intermediate set grows beyond `word_cap`.
std::set<std::string> enumerate_language(const RegexAst& ast, std::size_t max_len,
                                         std::size_t word_cap = kDefaultWordCap);

NatVector parikh_vector(std::string_view word, const std::string& alphabet);

// Image of the expression under a_j -> e_j.
RationalExpr parikh_expression(const RegexAst& ast);

}  // namespace cclosure
