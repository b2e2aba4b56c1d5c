#pragma once

// End-to-end check of the finite facts behind the (n/(n-1))+-freeness of
// the word over {1..n} with prefix 1 2 ... (n-1) whose Pansiot encoding is
// the limit word of a uniform morphism h.
//
// Checks, always run in this order:
//   structure            last letters of h(0), h(1) differ; 011 in h(0), 110 in h(1)
//   algebraic_condition  some tau conjugates sigma(h(i)) to sigma(i), i = 0, 1
//   factor_set_2         the length-2 factors of the limit word are {01, 10, 11}
//   markability_r        every length-r factor of h(0110) is 2-markable
//   iteration_bound      I(9n^2-6n+1, r) = 2, n^2-3n+1 < 9n^2-6n+1, r <= 4n
//   kernel_free          h^2(0110) has no kernel repetition
//   big_excess_free      v has no repetition with excess >= n-1
//   power_free           v has no repetition of exponent > n/(n-1)
// where v = decode(h^2(0110), 1 2 ... (n-1)).
//
// The step from a kernel repetition to one with non-markable excess is not
// executed: it is what the kernel bound 9n^2-6n+1 summarises, and the
// kernel_free check shows there is nothing for it to act on.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dejean/markability.hpp"
#include "dejean/morphisms.hpp"
#include "dejean/pansiot.hpp"
#include "dejean/perms.hpp"
#include "dejean/words.hpp"

namespace dejean {

inline constexpr std::array<std::string_view, 8> kCheckNames = {
    "structure",       "algebraic_condition", "factor_set_2",     "markability_r",
    "iteration_bound", "kernel_free",         "big_excess_free", "power_free",
};

struct Bounds {
  std::int64_t kernel_bound = 0;  // 9n^2 - 6n + 1
  std::int64_t short_bound = 0;   // n^2 - 3n + 1
  Rational threshold;             // n / (n-1)
};

inline Bounds compute_bounds(int n) {
  if (n < 2) throw precondition_error("compute_bounds: n must be at least 2");
  const std::int64_t nn = n;
  Bounds b{9 * nn * nn - 6 * nn + 1, nn * nn - 3 * nn + 1, Rational(nn, nn - 1)};
  // 4n + (n-1)(9n-1) is the last line of the chain before simplification.
  if (4 * nn + (nn - 1) * (9 * nn - 1) != b.kernel_bound) throw std::logic_error("compute_bounds: kernel bound mismatch");
  return b;
}

/// h^2(0110).
inline BinaryWord probe_image(const UniformMorphism& h) { return apply(h, apply(h, "0110")); }

/// The word over {1..n} with prefix 1 2 ... (n-1) and encoding h^2(0110).
inline SigmaWord build_v(const UniformMorphism& h) {
  SigmaWord v = decode(probe_image(h), canonical_prefix(h.n()));
  if (auto bad = v.first_non_distinct_window()) throw pansiot_error("build_v: decoded word is not Pansiot-valid", *bad);
  return v;
}

/// Maximal repetitions u of b with period q < |u| whose first q letters lie
/// in the kernel of sigma, sorted by (start, period). Periods above
/// max_period are skipped when it is given.
///
/// b[i, j) is in the kernel iff prefix permutations i and j coincide, so
/// candidate periods come from grouping equal prefix permutations. All
/// length-q factors of a period-q run are conjugate, so one kernel factor
/// marks the whole run.
inline std::vector<RepetitionOccurrence> find_kernel_repetitions(const BinaryWord& b, int n,
                                                                 std::optional<std::size_t> max_period = std::nullopt) {
  const PrefixSigmaTable table(b, n);
  std::unordered_map<std::string_view, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < table.size(); ++k) groups[table.key(k)].push_back(k);
  std::set<RepetitionOccurrence> found;
  std::set<std::pair<std::size_t, std::size_t>> covered;  // (period, comparison index) inside a reported run
  for (const auto& [key, positions] : groups) {
    for (std::size_t x = 0; x < positions.size(); ++x) {
      for (std::size_t y = x + 1; y < positions.size(); ++y) {
        const std::size_t i = positions[x];
        const std::size_t j = positions[y];
        const std::size_t q = j - i;
        if (max_period && q > *max_period) break;
        if (j >= b.size() || b[i] != b[j]) continue;
        if (covered.contains({q, i})) continue;
        auto [s, e] = maximal_extension(b, i, j + 1, q);
        for (std::size_t c = s; c + q < e; ++c) covered.insert({q, c});
        found.insert({s, q, e - s});
      }
    }
  }
  return {found.begin(), found.end()};
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
  double ms = 0.0;
};

struct VerificationReport {
  int n = 0;
  std::size_t r = 0;
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  /// Limit the kernel scan to periods q <= 9n^2-6n+1.
  bool bounded_kernel_scan = true;
  /// Checks to leave out of the report (test hook).
  std::set<std::string, std::less<>> skip;
};

struct CheckOutcome {
  bool pass;
  std::string witness;
};

namespace checks {

inline CheckOutcome structure(const UniformMorphism& h) {
  std::string problems;
  const auto add = [&](const std::string& s) { problems += (problems.empty() ? "" : "; ") + s; };
  if (h.image0().back() == h.image1().back()) add("h(0) and h(1) end in the same letter");
  if (!h.image0().contains(BinaryWord::parse("011"))) add("011 is not a factor of h(0)");
  if (!h.image1().contains(BinaryWord::parse("110"))) add("110 is not a factor of h(1)");
  if (!problems.empty()) return {false, problems};
  return {true, "r=" + std::to_string(h.r()) + " last letters " + std::to_string(h.image0().back()) + "/" +
                    std::to_string(h.image1().back()) + " |eta'|=" + std::to_string(h.eta_prime().size())};
}

inline CheckOutcome algebraic_condition(const UniformMorphism& h) {
  const int n = h.n();
  const Permutation a0 = sigma_word(h.image0(), n);
  const Permutation a1 = sigma_word(h.image1(), n);
  auto tau = find_conjugator(a0, a1, n);
  if (!tau) return {false, "no conjugator; sigma(h(0))=" + a0.str() + " sigma(h(1))=" + a1.str()};
  const Permutation inv = tau->inverse();
  if (*tau * a0 * inv != sigma0(n) || *tau * a1 * inv != sigma1(n))
    return {false, "conjugator " + tau->str() + " fails verification"};
  return {true, "tau=" + tau->str()};
}

inline CheckOutcome factor_set_2(const UniformMorphism& h) {
  const FactorSet u = factor_closure(h, 2);
  std::string list;
  for (const auto& w : u.members) list += (list.empty() ? "" : ",") + w.str();
  const std::set<BinaryWord> expected = {BinaryWord::parse("01"), BinaryWord::parse("10"), BinaryWord::parse("11")};
  return {u.members == expected, "U={" + list + "}"};
}

inline CheckOutcome markability_r(const UniformMorphism& h) {
  const MarkabilityReport rep = check_all_length_r_factors_markable(h);
  if (!rep.passed()) {
    const auto& f = rep.failures.front();
    return {false, std::to_string(rep.failures.size()) + " of " + std::to_string(rep.factor_count) +
                       " factors not 2-markable; first " + f.factor.str() + ": " + f.a.str() + " vs " + f.b.str()};
  }
  return {true, std::to_string(rep.factor_count) + " factors of length " + std::to_string(h.r()) + " all 2-markable"};
}

inline CheckOutcome iteration_bound(const UniformMorphism& h) {
  const int n = h.n();
  const Bounds b = compute_bounds(n);
  const auto r = static_cast<std::int64_t>(h.r());
  const std::int64_t i = r >= 2 ? iterate_bound(b.kernel_bound, r) : -1;
  const bool ok = i == 2 && b.short_bound < b.kernel_bound && r <= 4 * static_cast<std::int64_t>(n);
  return {ok, "I(" + std::to_string(b.kernel_bound) + "," + std::to_string(r) + ")=" + std::to_string(i) +
                  " short_bound=" + std::to_string(b.short_bound) + " r<=4n:" + (r <= 4 * n ? "yes" : "no")};
}

inline CheckOutcome kernel_free(const UniformMorphism& h, bool bounded) {
  std::optional<std::size_t> max_q;
  if (bounded) max_q = static_cast<std::size_t>(compute_bounds(h.n()).kernel_bound);
  const BinaryWord b = probe_image(h);
  const auto reps = find_kernel_repetitions(b, h.n(), max_q);
  if (!reps.empty()) return {false, std::to_string(reps.size()) + " kernel repetitions; first " + reps.front().str()};
  return {true, "|h^2(0110)|=" + std::to_string(b.size()) + " periods<=" + (max_q ? std::to_string(*max_q) : std::string("all"))};
}

inline CheckOutcome big_excess_free(const SigmaWord& v) {
  const auto n = static_cast<std::size_t>(v.alphabet_size());
  const auto reps = find_repetitions_with_excess_at_least(v, n - 1);
  if (!reps.empty()) return {false, reps.front().str()};
  return {true, "|v|=" + std::to_string(v.size()) + " no excess >= " + std::to_string(n - 1)};
}

inline CheckOutcome power_free(const SigmaWord& v) {
  const int n = v.alphabet_size();
  const auto reps = find_repetitions_exceeding(v, n, n - 1);
  if (!reps.empty()) return {false, reps.front().str()};
  return {true, "|v|=" + std::to_string(v.size()) + " max exponent " + max_exponent(v).exponent.str()};
}

}  // namespace checks

/// Runs every check (none short-circuits) and collects the results.
inline VerificationReport verify(const UniformMorphism& h, const VerifyOptions& options = {}) {
  VerificationReport report{h.n(), h.r(), {}};
  std::optional<SigmaWord> v;
  auto need_v = [&]() -> const SigmaWord& {
    if (!v) v = build_v(h);
    return *v;
  };
  for (std::string_view name : kCheckNames) {
    if (options.skip.contains(name)) continue;
    CheckResult res{std::string(name), false, {}, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      CheckOutcome out{false, {}};
      if (name == "structure") out = checks::structure(h);
      else if (name == "algebraic_condition") out = checks::algebraic_condition(h);
      else if (name == "factor_set_2") out = checks::factor_set_2(h);
      else if (name == "markability_r") out = checks::markability_r(h);
      else if (name == "iteration_bound") out = checks::iteration_bound(h);
      else if (name == "kernel_free") out = checks::kernel_free(h, options.bounded_kernel_scan);
      else if (name == "big_excess_free") out = checks::big_excess_free(need_v());
      else if (name == "power_free") out = checks::power_free(need_v());
      res.pass = out.pass;
      res.witness = std::move(out.witness);
    } catch (const std::exception& e) {
      res.pass = false;
      res.witness = std::string("error: ") + e.what();
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(res));
  }
  return report;
}

inline VerificationReport verify(int n, const VerifyOptions& options = {}) { return verify(builtin(n), options); }

}  // namespace dejean
