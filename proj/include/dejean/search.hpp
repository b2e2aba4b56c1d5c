#pragma once

// Backtracking search for convenient morphisms.
//
// Legal words are binary words b of a fixed length such that
// decode(b, 1 2 ... (n-1)) is (n/(n-1))+-power-free. They are enumerated
// depth first. A word whose sigma-image is an n-cycle may serve as h(1); one
// with cycle type {n-1, 1} may serve as h(0). Each new candidate is paired
// with the earlier candidates of the other kind that admit a common
// conjugator, and every such pair is run through verify().

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "dejean/morphisms.hpp"
#include "dejean/pansiot.hpp"
#include "dejean/perms.hpp"
#include "dejean/verifier.hpp"
#include "dejean/words.hpp"

namespace dejean {

namespace detail {

/// Depth-first state: the decoded word, the letter absent from its last
/// window at each depth, and sigma of each prefix.
class LegalPath {
 public:
  explicit LegalPath(int n) : n_(n) {
    for (int a = 1; a < n; ++a) letters_.push_back(static_cast<std::uint8_t>(a));
    absent_.push_back(static_cast<std::uint8_t>(n));
    auto id = Permutation::identity(n).images();
    sigma_.insert(sigma_.end(), id.begin(), id.end());
  }

  int n() const noexcept { return n_; }
  const BinaryWord& bits() const noexcept { return bits_; }

  /// Appends a bit. Returns false, leaving the state unchanged, if the new
  /// letter ends a repetition of exponent > n/(n-1).
  bool push(std::uint8_t bit) {
    const std::size_t gap = static_cast<std::size_t>(n_ - 1);
    const std::size_t oldest = letters_.size() - gap;
    const std::uint8_t leaving = letters_[oldest];
    const std::uint8_t absent = absent_.back();
    const std::uint8_t next = bit ? absent : leaving;
    letters_.push_back(next);
    if (ends_forbidden_repetition()) {
      letters_.pop_back();
      return false;
    }
    absent_.push_back(bit ? leaving : absent);
    bits_.push_back(bit);
    const auto n = static_cast<std::size_t>(n_);
    sigma_.resize(sigma_.size() + n);
    auto cur = sigma_.end() - static_cast<std::ptrdiff_t>(n);
    std::copy(cur - static_cast<std::ptrdiff_t>(n), cur, cur);
    right_multiply_generator(std::span<std::uint8_t>(&*cur, n), bit);
    return true;
  }

  void pop() {
    letters_.pop_back();
    absent_.pop_back();
    bits_.pop_back();
    sigma_.resize(sigma_.size() - static_cast<std::size_t>(n_));
  }

  Permutation sigma() const {
    return Permutation(std::vector<std::uint8_t>(sigma_.end() - n_, sigma_.end()));
  }

  /// Any repetition created by the last letter ends at it, so only suffixes
  /// are examined: for each period q, the run of matches w[k] == w[k-q]
  /// ending at the last position must stay below floor(q/(n-1)) + 1.
  bool ends_forbidden_repetition() const {
    const std::size_t e = letters_.size() - 1;
    const auto gap = static_cast<std::size_t>(n_ - 1);
    // Periods below n-1 cannot match inside a window of distinct letters.
    for (std::size_t q = gap; q <= e; ++q) {
      const std::size_t need = q / gap + 1;
      if (need > e - q + 1) break;
      std::size_t c = 0;
      while (c < need && letters_[e - c] == letters_[e - c - q]) ++c;
      if (c == need) return true;
    }
    return false;
  }

 private:
  int n_;
  std::vector<std::uint8_t> letters_;
  std::vector<std::uint8_t> absent_;
  std::vector<std::uint8_t> sigma_;
  BinaryWord bits_;
};

template <class V>
bool call_visitor(V& visitor, const LegalPath& path) {
  if constexpr (std::is_invocable_v<V&, const BinaryWord&, const Permutation&>) {
    using R = std::invoke_result_t<V&, const BinaryWord&, const Permutation&>;
    if constexpr (std::is_same_v<R, bool>) return visitor(path.bits(), path.sigma());
    else visitor(path.bits(), path.sigma());
  } else {
    using R = std::invoke_result_t<V&, const BinaryWord&>;
    if constexpr (std::is_same_v<R, bool>) return visitor(path.bits());
    else visitor(path.bits());
  }
  return true;
}

template <class V>
bool dfs(LegalPath& path, std::size_t length, V& visitor, std::uint64_t& count) {
  if (path.bits().size() == length) {
    ++count;
    return call_visitor(visitor, path);
  }
  for (std::uint8_t bit = 0; bit <= 1; ++bit) {
    if (!path.push(bit)) continue;
    const bool go_on = dfs(path, length, visitor, count);
    path.pop();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Visits, in lexicographic order, every legal word of the given length that
/// starts with `start`. The visitor takes (const BinaryWord&) or
/// (const BinaryWord&, const Permutation& sigma); returning false stops the
/// enumeration. Returns the number of words visited.
template <class Visitor>
std::uint64_t enumerate_legal(int n, std::size_t length, Visitor&& visitor, const BinaryWord& start = {}) {
  if (n < 2) throw precondition_error("enumerate_legal: n must be at least 2");
  if (length == 0) throw precondition_error("enumerate_legal: length must be at least 1");
  detail::LegalPath path(n);
  std::uint64_t count = 0;
  if (start.size() > length) return 0;
  for (auto bit : start) {
    if (!path.push(bit)) return 0;
  }
  detail::dfs(path, length, visitor, count);
  return count;
}

/// Number of legal words of the given length.
inline std::uint64_t count_legal(int n, std::size_t length) {
  return enumerate_legal(n, length, [](const BinaryWord&) {});
}

enum class CandidateKind { h0, h1, neither };

inline const char* to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::h0: return "h0-candidate";
    case CandidateKind::h1: return "h1-candidate";
    default: return "neither";
  }
}

/// h1 when sigma is an n-cycle, h0 when its cycle type is {n-1, 1}.
inline CandidateKind classify_sigma(const Permutation& sigma) {
  const auto n = static_cast<std::size_t>(sigma.degree());
  const auto type = sigma.cycle_type();
  if (type == std::vector<std::size_t>{n}) return CandidateKind::h1;
  if (n >= 2 && type == std::vector<std::size_t>{n - 1, 1}) return CandidateKind::h0;
  return CandidateKind::neither;
}

inline CandidateKind classify_candidate(const BinaryWord& b, int n) { return classify_sigma(sigma_word(b, n)); }

/// Candidate pools and pairing. Not thread-safe; search_convenient wraps it
/// in a mutex when sharded.
class ConvenientSearch {
 public:
  ConvenientSearch(int n, std::size_t limit, VerifyOptions options = {})
      : n_(n), limit_(limit), options_(std::move(options)), s0_(sigma0(n)) {
    if (limit_ == 0) throw precondition_error("ConvenientSearch: limit must be at least 1");
  }

  /// Adds a word to the pools if it is a candidate and pairs it with earlier
  /// candidates. Returns true once `limit` morphisms have been found.
  bool offer(const BinaryWord& b) { return offer(b, sigma_word(b, n_)); }

  bool offer(const BinaryWord& b, const Permutation& sigma) {
    if (done()) return true;
    const CandidateKind kind = classify_sigma(sigma);
    if (kind == CandidateKind::neither) return false;
    if (!seen_.insert(b).second) return done();
    if (kind == CandidateKind::h0) {
      const std::size_t idx = h0_.size();
      h0_.push_back({b, sigma});
      h0_by_sigma_[sigma.key()].push_back(idx);
      if (auto it = h1_by_required_a0_.find(sigma.key()); it != h1_by_required_a0_.end()) {
        for (std::size_t j : it->second) {
          if (try_pair(idx, j)) break;
        }
      }
    } else {
      const std::size_t idx = h1_.size();
      h1_.push_back({b, sigma});
      std::vector<std::size_t> partners;
      for (const auto& tau : cycle_aligners(sigma, n_)) {
        // tau * a0 * tau^-1 = sigma0  <=>  a0 = tau^-1 * sigma0 * tau.
        const std::string key = (tau.inverse() * s0_ * tau).key();
        auto& list = h1_by_required_a0_[key];
        if (list.empty() || list.back() != idx) list.push_back(idx);
        if (auto it = h0_by_sigma_.find(key); it != h0_by_sigma_.end())
          partners.insert(partners.end(), it->second.begin(), it->second.end());
      }
      std::ranges::sort(partners);
      partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
      for (std::size_t i : partners) {
        if (try_pair(i, idx)) break;
      }
    }
    return done();
  }

  bool done() const noexcept { return found_.size() >= limit_; }
  const std::vector<UniformMorphism>& found() const noexcept { return found_; }
  std::size_t h0_pool() const noexcept { return h0_.size(); }
  std::size_t h1_pool() const noexcept { return h1_.size(); }
  std::size_t pairs_tested() const noexcept { return pairs_tested_; }

 private:
  struct Candidate {
    BinaryWord word;
    Permutation sigma;
  };

  bool try_pair(std::size_t i0, std::size_t i1) {
    if (done()) return true;
    ++pairs_tested_;
    if (!find_conjugator(h0_[i0].sigma, h1_[i1].sigma, n_)) return false;
    UniformMorphism h(n_, h0_[i0].word, h1_[i1].word);
    // Cheap rejections first; verify() repeats each of them.
    try {
      if (!checks::structure(h).pass || !checks::factor_set_2(h).pass || !checks::markability_r(h).pass) return false;
    } catch (const std::exception&) {
      return false;
    }
    if (!verify(h, options_).overall()) return false;
    found_.push_back(std::move(h));
    return done();
  }

  int n_;
  std::size_t limit_;
  VerifyOptions options_;
  Permutation s0_;
  std::vector<Candidate> h0_, h1_;
  std::set<BinaryWord> seen_;
  std::unordered_map<std::string, std::vector<std::size_t>> h0_by_sigma_;
  std::unordered_map<std::string, std::vector<std::size_t>> h1_by_required_a0_;
  std::vector<UniformMorphism> found_;
  std::size_t pairs_tested_ = 0;
};

struct SearchOptions {
  std::size_t workers = 1;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
  std::uint64_t progress_every = 1u << 20;
  VerifyOptions verify;
};

/// Default image length: 4n-4, or 4n for n = 21.
inline std::size_t default_search_length(int n) { return builtin_length(n); }

/// Up to `limit` morphisms built from legal words of the given length that
/// pass verify(). With one worker the result is in discovery order; with
/// several it is sorted by (h0, h1), which is schedule independent whenever
/// the limit is not reached.
inline std::vector<UniformMorphism> search_convenient(int n, std::size_t length, std::size_t limit,
                                                      const SearchOptions& opts = {}) {
  ConvenientSearch search(n, limit, opts.verify);
  std::uint64_t visited = 0;
  auto report = [&] {
    if (opts.progress && visited % opts.progress_every == 0)
      *opts.progress << "search n=" << n << " visited=" << visited << " h0_pool=" << search.h0_pool()
                     << " h1_pool=" << search.h1_pool() << " pairs=" << search.pairs_tested() << '\n';
  };

  if (opts.workers <= 1) {
    enumerate_legal(n, length, [&](const BinaryWord& b, const Permutation& sigma) {
      ++visited;
      report();
      return !search.offer(b, sigma);
    });
    return search.found();
  }

  // Shard on legal prefixes of a fixed depth.
  std::size_t depth = 1;
  while ((std::size_t{1} << depth) < 8 * opts.workers && depth < length) ++depth;
  std::vector<BinaryWord> shards;
  enumerate_legal(n, depth, [&](const BinaryWord& b) { shards.push_back(b); });

  std::mutex mu;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next_shard{0};
  auto worker = [&] {
    for (std::size_t s; !stop && (s = next_shard++) < shards.size();) {
      enumerate_legal(
          n, length,
          [&](const BinaryWord& b, const Permutation& sigma) {
            if (stop) return false;
            if (classify_sigma(sigma) == CandidateKind::neither) {
              std::lock_guard lock(mu);
              ++visited;
              report();
              return true;
            }
            std::lock_guard lock(mu);
            ++visited;
            report();
            if (search.offer(b, sigma)) stop = true;
            return !stop.load();
          },
          shards[s]);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < opts.workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<UniformMorphism> out = search.found();
  std::ranges::sort(out, [](const UniformMorphism& a, const UniformMorphism& b) {
    return std::tie(a.image0(), a.image1()) < std::tie(b.image0(), b.image1());
  });
  return out;
}

}  // namespace dejean
