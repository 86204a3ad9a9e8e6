#include "cclosure/closure.hpp"

#include <stdexcept>

#include "cclosure/errors.hpp"

namespace cclosure {

namespace {

void check_alphabet(const ResimpleSystem& system, const std::string& alphabet) {
  if (alphabet.size() != system.dimension())
    throw AlphabetError("alphabet \"" + alphabet + "\" does not match a system over N^" +
                        std::to_string(system.dimension()));
}

}  // namespace

Dfa build_closure_dfa(const ResimpleSystem& system, const std::string& alphabet, std::size_t max_states) {
  check_alphabet(system, alphabet);
  const std::size_t k = system.dimension();
  const auto axes = system.axes();
  std::size_t n = 1;
  for (const auto& a : axes) {
    n *= static_cast<std::size_t>(a.size());
    if (n > max_states) throw ResourceLimit("closure automaton would exceed " + std::to_string(max_states) + " states");
  }

  std::vector<std::vector<ClassPattern>> local(k);
  for (std::size_t j = 0; j < k; ++j)
    for (Int s = 0; s < axes[j].size(); ++s) local[j].push_back(system.local_pattern(j, axes[j], s));

  // Mixed radix, coordinate 0 most significant.
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t j = k; j-- > 1;) stride[j - 1] = stride[j] * static_cast<std::size_t>(axes[j].size());

  std::vector<Dfa::State> table(n * k);
  std::vector<bool> finals(n);
  std::vector<Int> digits(k, 0);
  const std::size_t m = system.terms().size();
  for (std::size_t state = 0; state < n; ++state) {
    ClassPattern h(m);
    h.set();
    for (std::size_t j = 0; j < k; ++j) {
      h &= local[j][static_cast<std::size_t>(digits[j])];
      Int succ = axes[j].successor(digits[j]);
      table[state * k + j] =
          state - static_cast<std::size_t>(digits[j]) * stride[j] + static_cast<std::size_t>(succ) * stride[j];
    }
    finals[state] = system.coefficient_sum(h) == 1;
    for (std::size_t j = k; j-- > 0;) {
      if (++digits[j] < axes[j].size()) break;
      digits[j] = 0;
    }
  }
  return renumber(Dfa(alphabet, n, std::move(table), 0, std::move(finals)));
}

Dfa build_term_dfa(const ResimpleSystem& system, std::size_t h, const std::string& alphabet) {
  check_alphabet(system, alphabet);
  const auto& d = system.terms().at(h).offset;
  std::vector<Dfa> parts;
  for (std::size_t j = 0; j < system.dimension(); ++j) {
    Int p = system.periods()[j], dj = d[j];
    auto at_offset = [dj](Int s) { return s == dj; };
    // Outside J the count must equal d_j exactly; the extra state is a sink.
    parts.push_back(p > 0 ? counter(alphabet[j], dj, p, at_offset) : counter(alphabet[j], dj + 1, 1, at_offset));
  }
  if (parts.empty()) return Dfa("", 1, {}, 0, {true});
  return shuffle_product(parts);
}

Dfa build_closure_dfa_boolean(const ResimpleSystem& system, const std::string& alphabet) {
  check_alphabet(system, alphabet);
  const std::size_t m = system.terms().size();
  std::vector<Dfa> terms, negated;
  for (std::size_t h = 0; h < m; ++h) {
    terms.push_back(build_term_dfa(system, h, alphabet));
    negated.push_back(complement(terms.back()));
  }
  Dfa result = empty_dfa(alphabet);
  for (const auto& cls : system.good_classes()) {
    Dfa part = complement(empty_dfa(alphabet));
    for (std::size_t h = 0; h < m; ++h) part = minimize(intersect(part, cls[h] ? terms[h] : negated[h]));
    result = minimize(unite(result, part));
  }
  return result;
}

}  // namespace cclosure
