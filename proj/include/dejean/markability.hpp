#pragma once

// 2-markability of factors relative to a uniform morphism.
//
// An occurrence of v at position p of h(u), u of length 2, splits h(u) as
// h(X) x v ... with |X| = p / r and x = h(u)[r*|X|, p). v is 2-markable when
// the phase word x is the same for every occurrence across all u in U.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dejean/morphisms.hpp"
#include "dejean/words.hpp"

namespace dejean {

struct PhaseOccurrence {
  BinaryWord block;  // u
  std::size_t position = 0;
  BinaryWord phase_word;  // x

  std::string str() const {
    return "u=" + block.str() + " pos=" + std::to_string(position) + " x=\"" + phase_word.str() + "\"";
  }
};

struct MarkabilityResult {
  bool markable = true;
  /// Two occurrences with different phase words, when not markable.
  std::optional<std::pair<PhaseOccurrence, PhaseOccurrence>> conflict;

  explicit operator bool() const noexcept { return markable; }
};

/// Occurrences of v in h(u) together with their phase words.
inline std::vector<PhaseOccurrence> phase_occurrences(const BinaryWord& v, const UniformMorphism& h, const BinaryWord& u) {
  std::vector<PhaseOccurrence> out;
  const BinaryWord image = apply(h, u);
  const std::size_t r = h.r();
  if (v.size() > image.size()) return out;
  for (std::size_t p = 0; p + v.size() <= image.size(); ++p) {
    if (!std::equal(v.begin(), v.end(), image.begin() + static_cast<std::ptrdiff_t>(p))) continue;
    const std::size_t boundary = p - p % r;
    out.push_back({u, p, image.substr(boundary, p - boundary)});
  }
  return out;
}

inline MarkabilityResult is_2markable(const BinaryWord& v, const UniformMorphism& h, const FactorSet& pairs) {
  if (pairs.length != 2) throw precondition_error("is_2markable: factor set must hold words of length 2");
  std::optional<PhaseOccurrence> first;
  for (const auto& u : pairs.members) {
    for (auto& occ : phase_occurrences(v, h, u)) {
      if (!first) {
        first = std::move(occ);
      } else if (occ.phase_word != first->phase_word) {
        return {false, std::make_pair(*first, std::move(occ))};
      }
    }
  }
  return {};
}

struct MarkabilityFailure {
  BinaryWord factor;
  PhaseOccurrence a, b;
};

struct MarkabilityReport {
  std::size_t factor_count = 0;
  std::vector<MarkabilityFailure> failures;  // lexicographic by factor

  bool passed() const noexcept { return failures.empty(); }
};

/// Distinct length-r factors of h(0110), lexicographically ordered.
inline std::vector<BinaryWord> length_r_factors_of_probe(const UniformMorphism& h) {
  std::set<BinaryWord> found;
  collect_factors(apply(h, "0110"), h.r(), found);
  return {found.begin(), found.end()};
}

/// Checks that every length-r factor of h(0110) is 2-markable.
inline MarkabilityReport check_all_length_r_factors_markable(const UniformMorphism& h) {
  const FactorSet pairs = factor_closure(h, 2);
  MarkabilityReport report;
  for (const auto& v : length_r_factors_of_probe(h)) {
    ++report.factor_count;
    auto res = is_2markable(v, h, pairs);
    if (!res) report.failures.push_back({v, res.conflict->first, res.conflict->second});
  }
  return report;
}

}  // namespace dejean
