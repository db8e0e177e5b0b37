#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fibrekit {

/// A word in the free group: letter +k is generator k-1, letter -k its
/// inverse (k >= 1).
using Word = std::vector<int>;

Word free_reduce(const Word& w);
/// Free and cyclic reduction.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
/// Exponent sum of every generator.
std::vector<long long> exponent_sums(const Word& w, std::size_t generators);

/// Finite group presentation with freely reduced relators.
struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  /// Optional display names; empty means x1, x2, ...
  std::vector<std::string> names;

  std::string generator_name(std::size_t index) const;
  std::string format_word(const Word& w) const;
  /// "<a,b,t | [a,b], t a^2 b^-1 t^-1 b^-1 a^-2>"
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Commutator a b a^-1 b^-1 of two generators (0-based indices).
Word commutator(std::size_t a, std::size_t b);

struct SimplifyResult {
  Presentation presentation;
  bool trivial = false;
  bool budget_exhausted = false;
  std::size_t steps = 0;
};

/// Tietze-style simplification: free/cyclic reduction, elimination of a
/// generator occurring exactly once in some relator, and replacement of a
/// long shared cyclic subword by the shorter complement of another
/// relator. Stops when no move applies or the step budget is spent.
SimplifyResult simplify(Presentation p, std::size_t budget);

}  // namespace fibrekit
