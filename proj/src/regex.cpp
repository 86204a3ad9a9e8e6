#include "cclosure/regex.hpp"

#include <algorithm>
#include <vector>

#include "cclosure/errors.hpp"

namespace cclosure {

RegexPtr RegexNode::empty_set() {
  return std::make_shared<const RegexNode>(RegexNode{Kind::EmptySet, 0, nullptr, nullptr});
}
RegexPtr RegexNode::empty_word() {
  return std::make_shared<const RegexNode>(RegexNode{Kind::EmptyWord, 0, nullptr, nullptr});
}
RegexPtr RegexNode::make_letter(char c) {
  return std::make_shared<const RegexNode>(RegexNode{Kind::Letter, c, nullptr, nullptr});
}
RegexPtr RegexNode::make_union(RegexPtr l, RegexPtr r) {
  return std::make_shared<const RegexNode>(RegexNode{Kind::Union, 0, std::move(l), std::move(r)});
}
RegexPtr RegexNode::make_concat(RegexPtr l, RegexPtr r) {
  return std::make_shared<const RegexNode>(RegexNode{Kind::Concat, 0, std::move(l), std::move(r)});
}
RegexPtr RegexNode::make_star(RegexPtr e) {
  return std::make_shared<const RegexNode>(RegexNode{Kind::Star, 0, std::move(e), nullptr});
}

bool structurally_equal(const RegexNode& a, const RegexNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RegexNode::Kind::EmptySet:
    case RegexNode::Kind::EmptyWord:
      return true;
    case RegexNode::Kind::Letter:
      return a.letter == b.letter;
    case RegexNode::Kind::Star:
      return structurally_equal(*a.left, *b.left);
    case RegexNode::Kind::Union:
    case RegexNode::Kind::Concat:
      return structurally_equal(*a.left, *b.left) && structurally_equal(*a.right, *b.right);
  }
  return false;
}

namespace {

bool is_symbol(char c) { return c >= 'a' && c <= 'z'; }

void collect_letters(const RegexNode& n, std::string& out) {
  switch (n.kind) {
    case RegexNode::Kind::Letter:
      out.push_back(n.letter);
      break;
    case RegexNode::Kind::Union:
    case RegexNode::Kind::Concat:
      collect_letters(*n.left, out);
      collect_letters(*n.right, out);
      break;
    case RegexNode::Kind::Star:
      collect_letters(*n.left, out);
      break;
    default:
      break;
  }
}

std::string normalize_alphabet(std::string a) {
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_symbol(a[i]))
      throw AlphabetError(std::string("alphabet symbol '") + a[i] + "' is not a lowercase letter");
    if (i > 0 && a[i] == a[i - 1])
      throw AlphabetError(std::string("alphabet lists '") + a[i] + "' twice");
  }
  return a;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexPtr parse() {
    RegexPtr e = parse_union();
    skip_blanks();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  int peek() {
    skip_blanks();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  static bool starts_atom(int c) { return (c >= 'a' && c <= 'z') || c == '_' || c == '#' || c == '('; }

  RegexPtr parse_union() {
    RegexPtr e = parse_concat();
    while (peek() == '|') {
      ++pos_;
      e = RegexNode::make_union(e, parse_concat());
    }
    return e;
  }

  RegexPtr parse_concat() {
    if (!starts_atom(peek())) {
      if (pos_ >= text_.size()) fail("expression expected at end of input");
      fail(std::string("expression expected before '") + text_[pos_] + "'");
    }
    RegexPtr e = parse_starred();
    while (starts_atom(peek())) e = RegexNode::make_concat(e, parse_starred());
    return e;
  }

  RegexPtr parse_starred() {
    RegexPtr e = parse_atom();
    while (peek() == '*') {
      ++pos_;
      e = RegexNode::make_star(e);
    }
    return e;
  }

  RegexPtr parse_atom() {
    int c = peek();
    std::size_t start = pos_;
    ++pos_;
    if (c == '_') return RegexNode::empty_word();
    if (c == '#') return RegexNode::empty_set();
    if (c == '(') {
      RegexPtr e = parse_union();
      if (peek() != ')') {
        pos_ = std::min(pos_, text_.size());
        fail("missing ')' for '(' at " + std::to_string(start));
      }
      ++pos_;
      return e;
    }
    return RegexNode::make_letter(static_cast<char>(c));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence levels: union 0, concatenation 1, star 2, atoms 3.
int level(const RegexNode& n) {
  switch (n.kind) {
    case RegexNode::Kind::Union:
      return 0;
    case RegexNode::Kind::Concat:
      return 1;
    case RegexNode::Kind::Star:
      return 2;
    default:
      return 3;
  }
}

void print(const RegexNode& n, int min_level, std::string& out) {
  bool paren = level(n) < min_level;
  if (paren) out.push_back('(');
  switch (n.kind) {
    case RegexNode::Kind::EmptySet:
      out.push_back('#');
      break;
    case RegexNode::Kind::EmptyWord:
      out.push_back('_');
      break;
    case RegexNode::Kind::Letter:
      out.push_back(n.letter);
      break;
    case RegexNode::Kind::Union:
      // The parser associates to the left, so a right operand of the same
      // kind keeps its parentheses.
      print(*n.left, 0, out);
      out.push_back('|');
      print(*n.right, 1, out);
      break;
    case RegexNode::Kind::Concat:
      print(*n.left, 1, out);
      print(*n.right, 2, out);
      break;
    case RegexNode::Kind::Star:
      print(*n.left, 2, out);
      out.push_back('*');
      break;
  }
  if (paren) out.push_back(')');
}

using WordSet = std::set<std::string>;

class Enumerator {
 public:
  Enumerator(std::size_t max_len, std::size_t cap) : max_len_(max_len), cap_(cap) {}

  WordSet run(const RegexNode& n) {
    WordSet out;
    switch (n.kind) {
      case RegexNode::Kind::EmptySet:
        break;
      case RegexNode::Kind::EmptyWord:
        out.insert("");
        break;
      case RegexNode::Kind::Letter:
        if (max_len_ >= 1) out.insert(std::string(1, n.letter));
        break;
      case RegexNode::Kind::Union:
        out = run(*n.left);
        out.merge(run(*n.right));
        check(out);
        break;
      case RegexNode::Kind::Concat: {
        WordSet l = run(*n.left);
        if (l.empty()) break;
        WordSet r = run(*n.right);
        for (const auto& u : l)
          for (const auto& v : r)
            if (u.size() + v.size() <= max_len_) {
              out.insert(u + v);
              check(out);
            }
        break;
      }
      case RegexNode::Kind::Star: {
        WordSet base = run(*n.left);
        base.erase("");
        out.insert("");
        std::vector<std::string> frontier{""};
        while (!frontier.empty()) {
          std::vector<std::string> next;
          for (const auto& u : frontier)
            for (const auto& v : base) {
              if (u.size() + v.size() > max_len_) continue;
              auto [it, fresh] = out.insert(u + v);
              if (fresh) next.push_back(*it);
            }
          check(out);
          frontier = std::move(next);
        }
        break;
      }
    }
    return out;
  }

 private:
  void check(const WordSet& s) const {
    if (s.size() > cap_)
      throw ResourceLimit("language enumeration exceeded " + std::to_string(cap_) + " words");
  }

  std::size_t max_len_;
  std::size_t cap_;
};

RationalExpr translate(const RegexNode& n, const RegexAst& ast) {
  std::size_t k = ast.dimension();
  switch (n.kind) {
    case RegexNode::Kind::EmptySet:
      return RationalExpr::empty(k);
    case RegexNode::Kind::EmptyWord:
      return RationalExpr::point(NatVector(k));
    case RegexNode::Kind::Letter:
      return RationalExpr::point(NatVector::unit(k, ast.coordinate(n.letter)));
    case RegexNode::Kind::Union:
      return RationalExpr::unite(translate(*n.left, ast), translate(*n.right, ast));
    case RegexNode::Kind::Concat:
      return RationalExpr::sum(translate(*n.left, ast), translate(*n.right, ast));
    case RegexNode::Kind::Star:
      return RationalExpr::plus(translate(*n.left, ast));
  }
  return RationalExpr::empty(k);
}

}  // namespace

RegexAst::RegexAst(RegexPtr root, std::string alphabet)
    : root_(std::move(root)), alphabet_(normalize_alphabet(std::move(alphabet))) {
  std::string used;
  collect_letters(*root_, used);
  for (char c : used)
    if (alphabet_.find(c) == std::string::npos)
      throw AlphabetError(std::string("letter '") + c + "' is not in the alphabet \"" + alphabet_ + "\"");
}

std::size_t RegexAst::coordinate(char letter) const {
  auto p = alphabet_.find(letter);
  if (p == std::string::npos) throw AlphabetError(std::string("unknown letter '") + letter + "'");
  return p;
}

RegexAst parse_regex(std::string_view text, std::optional<std::string> alphabet) {
  RegexPtr root = Parser(text).parse();
  if (!alphabet) {
    std::string used;
    collect_letters(*root, used);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    alphabet = std::move(used);
  }
  return RegexAst(std::move(root), std::move(*alphabet));
}

std::string to_string(const RegexNode& node) {
  std::string out;
  print(node, 0, out);
  return out;
}

std::string to_string(const RegexAst& ast) { return to_string(ast.root()); }

std::set<std::string> enumerate_language(const RegexAst& ast, std::size_t max_len, std::size_t word_cap) {
  return Enumerator(max_len, word_cap).run(ast.root());
}

NatVector parikh_vector(std::string_view word, const std::string& alphabet) {
  NatVector v(alphabet.size());
  for (char c : word) {
    auto p = alphabet.find(c);
    if (p == std::string::npos) throw AlphabetError(std::string("unknown letter '") + c + "'");
    ++v[p];
  }
  return v;
}

RationalExpr parikh_expression(const RegexAst& ast) { return translate(ast.root(), ast); }

}  // namespace cclosure
