#pragma once

// Finite words over {0,1} and over {1..n}, exact exponents, and period-run
// scanning. Every routine here is integer-only.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace dejean {

/// Raised when an argument violates a documented precondition.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when textual input cannot be read as a word.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Rational

/// Exact non-negative rational kept in lowest terms. Ordering is by
/// cross-multiplication; the values compared here are string lengths, so
/// 64-bit products never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw precondition_error("Rational: denominator must be positive");
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// ---------------------------------------------------------------------------
// Words

namespace detail {

class word_base {
 public:
  using value_type = std::uint8_t;
  using const_iterator = std::vector<std::uint8_t>::const_iterator;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::uint8_t* data() const noexcept { return symbols_.data(); }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  std::uint8_t back() const { return symbols_.back(); }
  std::span<const std::uint8_t> span() const noexcept { return symbols_; }
  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }

 protected:
  word_base() = default;
  explicit word_base(std::vector<std::uint8_t> s) : symbols_(std::move(s)) {}

  std::vector<std::uint8_t> symbols_;
};

}  // namespace detail

/// Word over {0,1}. Symbols are stored as the integers 0 and 1.
class BinaryWord : public detail::word_base {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::vector<std::uint8_t> bits) : word_base(std::move(bits)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] > 1) throw precondition_error("BinaryWord: symbol at " + std::to_string(i) + " is not 0 or 1");
    }
  }

  /// Reads a string of '0'/'1' characters.
  static BinaryWord parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c != '0' && c != '1') throw parse_error("expected '0' or '1'", i);
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(bits));
  }

  std::string str() const {
    std::string s;
    s.reserve(size());
    for (auto b : symbols_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  void push_back(std::uint8_t bit) {
    if (bit > 1) throw precondition_error("BinaryWord: symbol is not 0 or 1");
    symbols_.push_back(bit);
  }
  void pop_back() { symbols_.pop_back(); }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  BinaryWord& operator+=(const BinaryWord& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
  }
  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a += b; }

  BinaryWord substr(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("BinaryWord::substr");
    return BinaryWord(std::vector<std::uint8_t>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  bool contains(const BinaryWord& needle) const {
    return std::ranges::search(symbols_, needle.symbols_).begin() != symbols_.end() || needle.empty();
  }

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) { return a.symbols_ == b.symbols_; }
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.symbols_ <=> b.symbols_; }
};

/// Word over the alphabet {1,...,n}.
class SigmaWord : public detail::word_base {
 public:
  static constexpr int kMaxAlphabet = 255;

  explicit SigmaWord(int n) : n_(n) { check_alphabet(n); }

  SigmaWord(int n, std::vector<std::uint8_t> letters) : word_base(std::move(letters)), n_(n) {
    check_alphabet(n);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] < 1 || symbols_[i] > n_)
        throw precondition_error("SigmaWord: letter at " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
  }

  int alphabet_size() const noexcept { return n_; }

  void push_back(std::uint8_t letter) {
    if (letter < 1 || letter > n_) throw precondition_error("SigmaWord: letter outside alphabet");
    symbols_.push_back(letter);
  }
  void pop_back() { symbols_.pop_back(); }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  /// Index of the first length-(n-1) window with a repeated letter, if any.
  std::optional<std::size_t> first_non_distinct_window() const {
    const std::size_t w = static_cast<std::size_t>(n_ - 1);
    if (w == 0 || size() < w) return std::nullopt;
    std::vector<int> count(static_cast<std::size_t>(n_) + 1, 0);
    int repeated = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (++count[symbols_[i]] == 2) ++repeated;
      if (i >= w && --count[symbols_[i - w]] == 1) --repeated;
      if (i + 1 >= w && repeated > 0) return i + 1 - w;
    }
    return std::nullopt;
  }

  /// True when every factor of length n-1 has n-1 distinct letters.
  bool is_pansiot_valid() const { return !first_non_distinct_window().has_value(); }

  /// Digits when n <= 9, dot-separated decimals otherwise.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (n_ > 9 && i > 0) s.push_back('.');
      s += std::to_string(symbols_[i]);
    }
    return s;
  }

  /// Inverse of str(). Also accepts whitespace as a separator.
  static SigmaWord parse(std::string_view text, int n) {
    std::vector<std::uint8_t> letters;
    const bool separated = text.find_first_of(". \t") != std::string_view::npos || n > 9;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '.' || c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c < '0' || c > '9') throw parse_error("expected a decimal letter", i);
      const std::size_t start = i;
      int value = 0;
      if (separated) {
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + (text[i] - '0');
          if (value > kMaxAlphabet) throw parse_error("letter too large", start);
          ++i;
        }
      } else {
        value = c - '0';
        ++i;
      }
      if (value < 1 || value > n) throw parse_error("letter outside 1.." + std::to_string(n), start);
      letters.push_back(static_cast<std::uint8_t>(value));
    }
    return SigmaWord(n, std::move(letters));
  }

  friend bool operator==(const SigmaWord& a, const SigmaWord& b) { return a.n_ == b.n_ && a.symbols_ == b.symbols_; }

 private:
  static void check_alphabet(int n) {
    if (n < 2 || n > kMaxAlphabet) throw precondition_error("SigmaWord: alphabet size must lie in 2..255");
  }

  int n_;
};

// ---------------------------------------------------------------------------
// Repetitions

/// A factor w[start, start+length) with period `period`.
struct RepetitionOccurrence {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t length = 0;

  std::size_t excess() const noexcept { return length - period; }
  Rational exponent() const {
    return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  std::string str() const {
    return "start=" + std::to_string(start) + " period=" + std::to_string(period) +
           " length=" + std::to_string(length) + " exponent=" + exponent().str();
  }

  friend bool operator==(const RepetitionOccurrence&, const RepetitionOccurrence&) = default;
  friend auto operator<=>(const RepetitionOccurrence&, const RepetitionOccurrence&) = default;
};

/// Contiguous symbol sequences: BinaryWord, SigmaWord, std::string,
/// std::vector, spans. Raw arrays are excluded so that a string literal's
/// terminating NUL never becomes a symbol.
template <class W>
concept Word = std::ranges::contiguous_range<W> && std::ranges::sized_range<W> && !std::is_array_v<std::remove_cvref_t<W>>;

/// True iff w[k] == w[k+q] for every i <= k < j-q.
template <Word W>
bool has_period(const W& w, std::size_t i, std::size_t j, std::size_t q) {
  const std::size_t len = std::ranges::size(w);
  if (i > j || j > len) throw std::out_of_range("has_period: interval outside the word");
  if (q == 0) throw precondition_error("has_period: period must be at least 1");
  const auto* p = std::ranges::data(w);
  for (std::size_t k = i; k + q < j; ++k) {
    if (p[k] != p[k + q]) return false;
  }
  return true;
}

/// Widens the occurrence w[i, j) to the maximal interval of period q that
/// contains it. Requires j - i >= q so that the maximal interval is unique.
template <Word W>
std::pair<std::size_t, std::size_t> maximal_extension(const W& w, std::size_t i, std::size_t j, std::size_t q) {
  if (!has_period(w, i, j, q)) throw precondition_error("maximal_extension: occurrence lacks the given period");
  if (j - i < q) throw precondition_error("maximal_extension: occurrence shorter than its period");
  const auto* p = std::ranges::data(w);
  const std::size_t len = std::ranges::size(w);
  while (i > 0 && p[i - 1] == p[i - 1 + q]) --i;
  while (j < len && p[j] == p[j - q]) ++j;
  return {i, j};
}

/// Calls fn(start, length) for every maximal period-q run of w whose excess
/// (length - q) is at least min_excess. Runs are visited in start order.
///
/// Only every min_excess-th comparison is probed first: a run of at least
/// min_excess consecutive matches w[k] == w[k+q] always covers an index k
/// with k % min_excess == min_excess - 1.
template <Word W, class Fn>
void for_each_period_run(const W& w, std::size_t q, std::size_t min_excess, Fn&& fn) {
  const std::size_t len = std::ranges::size(w);
  if (q == 0 || min_excess == 0) throw precondition_error("for_each_period_run: period and excess must be positive");
  if (q >= len) return;
  const std::size_t comparisons = len - q;
  if (comparisons < min_excess) return;
  const auto* p = std::ranges::data(w);
  std::size_t covered = 0;
  for (std::size_t k = min_excess - 1; k < comparisons; k += min_excess) {
    if (k < covered || p[k] != p[k + q]) continue;
    std::size_t a = k;
    while (a > 0 && p[a - 1] == p[a - 1 + q]) --a;
    std::size_t b = k + 1;
    while (b < comparisons && p[b] == p[b + q]) ++b;
    if (b - a >= min_excess) fn(a, b - a + q);
    covered = b;
  }
}

/// Smallest excess e >= 1 with (q + e) / q > num / den.
inline std::size_t min_excess_exceeding(std::size_t q, std::int64_t num, std::int64_t den) {
  const auto qq = static_cast<std::int64_t>(q);
  const std::int64_t e = (qq * (num - den)) / den + 1;
  return static_cast<std::size_t>(std::max<std::int64_t>(e, 1));
}

struct MaxExponent {
  Rational exponent{1, 1};
  std::optional<RepetitionOccurrence> witness;
};

/// Largest exponent |v|/q over factors v with a period q < |v|. Words without
/// any such factor report 1/1 and no witness. Among equal exponents the
/// witness with the smallest period, then smallest start, is kept.
template <Word W>
MaxExponent max_exponent(const W& w) {
  const std::size_t len = std::ranges::size(w);
  if (len == 0) throw precondition_error("max_exponent: empty word");
  MaxExponent best;
  for (std::size_t q = 1; q < len; ++q) {
    // Even the whole word cannot beat the current best with this period.
    if (Rational(static_cast<std::int64_t>(len), static_cast<std::int64_t>(q)) <= best.exponent) break;
    const std::size_t need = min_excess_exceeding(q, best.exponent.num(), best.exponent.den());
    for_each_period_run(w, q, need, [&](std::size_t start, std::size_t length) {
      RepetitionOccurrence occ{start, q, length};
      if (occ.exponent() > best.exponent) {
        best.exponent = occ.exponent();
        best.witness = occ;
      }
    });
  }
  return best;
}

/// Every maximal repetition with exponent strictly greater than num/den,
/// sorted by (start, period). Empty iff w is (num/den)+-power-free.
template <Word W>
std::vector<RepetitionOccurrence> find_repetitions_exceeding(const W& w, std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < den) throw precondition_error("find_repetitions_exceeding: threshold must be >= 1");
  std::vector<RepetitionOccurrence> out;
  const std::size_t len = std::ranges::size(w);
  for (std::size_t q = 1; q < len; ++q) {
    const std::size_t need = min_excess_exceeding(q, num, den);
    if (q + need > len) {
      // need grows with q, so no larger period can fit either.
      break;
    }
    for_each_period_run(w, q, need, [&](std::size_t start, std::size_t length) {
      out.push_back({start, q, length});
    });
  }
  std::ranges::sort(out);
  return out;
}

/// Every maximal repetition whose excess (length - period) is at least
/// min_excess, sorted by (start, period).
template <Word W>
std::vector<RepetitionOccurrence> find_repetitions_with_excess_at_least(const W& w, std::size_t min_excess) {
  if (min_excess == 0) throw precondition_error("find_repetitions_with_excess_at_least: min_excess must be >= 1");
  std::vector<RepetitionOccurrence> out;
  const std::size_t len = std::ranges::size(w);
  for (std::size_t q = 1; q + min_excess <= len; ++q) {
    for_each_period_run(w, q, min_excess, [&](std::size_t start, std::size_t length) {
      out.push_back({start, q, length});
    });
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace dejean
