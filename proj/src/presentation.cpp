#include "fibrekit/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

namespace fibrekit {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::vector<long long> exponent_sums(const Word& w, std::size_t generators) {
  std::vector<long long> sums(generators, 0);
  for (int x : w) sums.at(static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
  return sums;
}

Word commutator(std::size_t a, std::size_t b) {
  int x = static_cast<int>(a) + 1;
  int y = static_cast<int>(b) + 1;
  return {x, y, -x, -y};
}

std::string Presentation::generator_name(std::size_t index) const {
  if (index < names.size()) return names[index];
  return "x" + std::to_string(index + 1);
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long power = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += generator_name(static_cast<std::size_t>(std::abs(w[i]) - 1));
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (std::size_t g = 0; g < generators; ++g) out += (g ? "," : "") + generator_name(g);
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    out += format_word(relators[r]);
  }
  return out + ">";
}

namespace {

// Canonical representative of a cyclic word up to rotation and inversion.
Word cyclic_canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rotated(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
      rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
      if (rotated < best) best = std::move(rotated);
    }
  }
  return best;
}

Word rotate(const Word& w, std::size_t start) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

class Simplifier {
 public:
  Simplifier(Presentation p, std::size_t budget) : p_(std::move(p)), budget_(budget) {}

  SimplifyResult run() {
    SimplifyResult result;
    for (;;) {
      if (!normalize()) break;
      if (p_.generators == 0) {
        result.trivial = true;
        break;
      }
      if (eliminate_generator()) continue;
      if (exhausted_) break;
      if (shorten_by_overlap()) continue;
      break;
    }
    result.budget_exhausted = exhausted_;
    result.steps = steps_;
    result.presentation = std::move(p_);
    return result;
  }

 private:
  bool charge(std::size_t cost) {
    steps_ += std::max<std::size_t>(cost, 1);
    if (steps_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  bool normalize() {
    std::set<Word> seen;
    std::vector<Word> kept;
    std::size_t cost = 0;
    for (const auto& r : p_.relators) {
      Word c = cyclic_reduce(r);
      cost += r.size();
      if (c.empty()) continue;
      if (seen.insert(cyclic_canonical(c)).second) kept.push_back(std::move(c));
    }
    p_.relators = std::move(kept);
    return charge(cost);
  }

  bool eliminate_generator() {
    std::optional<std::size_t> best_relator;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i < p_.relators.size(); ++i) {
      const Word& r = p_.relators[i];
      if (best_relator && p_.relators[*best_relator].size() <= r.size()) continue;
      std::vector<int> count(p_.generators, 0);
      for (int x : r) ++count[static_cast<std::size_t>(std::abs(x) - 1)];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        if (count[static_cast<std::size_t>(std::abs(r[pos]) - 1)] == 1) {
          best_relator = i;
          best_pos = pos;
          break;
        }
      }
    }
    if (!best_relator) return false;

    Word r = rotate(p_.relators[*best_relator], best_pos);
    int letter = r.front();
    Word rest(r.begin() + 1, r.end());
    // letter * rest = 1, so letter = rest^-1.
    Word for_letter = inverse(rest);
    Word replacement = letter > 0 ? for_letter : inverse(for_letter);
    int generator = std::abs(letter);

    std::vector<Word> relators;
    std::size_t cost = 0;
    for (std::size_t i = 0; i < p_.relators.size(); ++i) {
      if (i == *best_relator) continue;
      Word out;
      for (int x : p_.relators[i]) {
        if (std::abs(x) == generator) {
          const Word& piece = x > 0 ? replacement : inverse(replacement);
          out.insert(out.end(), piece.begin(), piece.end());
        } else {
          out.push_back(x);
        }
      }
      cost += out.size();
      for (int& x : out) {
        if (std::abs(x) > generator) x += x > 0 ? -1 : 1;
      }
      relators.push_back(free_reduce(out));
    }
    p_.relators = std::move(relators);
    if (static_cast<std::size_t>(generator - 1) < p_.names.size()) {
      p_.names.erase(p_.names.begin() + (generator - 1));
    }
    --p_.generators;
    charge(cost);
    return true;
  }

  // Finds a cyclic subword of `target` equal to a prefix of some rotation
  // of `rel` (or its inverse) longer than half of `rel`, and swaps it for
  // the inverse of the remaining part.
  std::optional<Word> shorten(const Word& rel, const Word& target) {
    std::size_t n = rel.size();
    std::size_t m = target.size();
    for (const Word& base : {rel, inverse(rel)}) {
      for (std::size_t s = 0; s < n; ++s) {
        Word c = rotate(base, s);
        for (std::size_t len = std::min(n, m); len * 2 > n; --len) {
          if (!charge(m)) return std::nullopt;
          for (std::size_t q = 0; q < m; ++q) {
            bool match = true;
            for (std::size_t t = 0; t < len && match; ++t) {
              match = target[(q + t) % m] == c[t];
            }
            if (!match) continue;
            Word rotated = rotate(target, q);
            Word out = inverse(Word(c.begin() + static_cast<std::ptrdiff_t>(len), c.end()));
            out.insert(out.end(), rotated.begin() + static_cast<std::ptrdiff_t>(len), rotated.end());
            return cyclic_reduce(out);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool shorten_by_overlap() {
    for (std::size_t i = 0; i < p_.relators.size(); ++i) {
      for (std::size_t j = 0; j < p_.relators.size(); ++j) {
        if (i == j) continue;
        auto shorter = shorten(p_.relators[i], p_.relators[j]);
        if (exhausted_) return false;
        if (shorter && shorter->size() < p_.relators[j].size()) {
          p_.relators[j] = std::move(*shorter);
          return true;
        }
      }
    }
    return false;
  }

  Presentation p_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SimplifyResult simplify(Presentation p, std::size_t budget) {
  return Simplifier(std::move(p), budget).run();
}

}  // namespace fibrekit
