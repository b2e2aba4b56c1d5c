#pragma once

// Pansiot encoding between words over {1..n} whose (n-1)-windows hold
// distinct letters and binary codewords.
//
// Positions are 1-based in the prose below and 0-based in code: bit i of the
// encoding (0-based) compares v[i] with v[i+n-1].

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dejean/words.hpp"

namespace dejean {

/// Raised when a word cannot be encoded because an (n-1)-window repeats a
/// letter.
class pansiot_error : public precondition_error {
 public:
  pansiot_error(const std::string& what, std::size_t window)
      : precondition_error(what + " (window " + std::to_string(window) + ")"), window_(window) {}
  std::size_t window() const noexcept { return window_; }

 private:
  std::size_t window_;
};

/// The word 1 2 ... (n-1).
inline SigmaWord canonical_prefix(int n) {
  SigmaWord w(n);
  for (int a = 1; a < n; ++a) w.push_back(static_cast<std::uint8_t>(a));
  return w;
}

/// b_i = 0 iff v_i = v_{i+n-1}.
inline BinaryWord encode(const SigmaWord& v) {
  const auto gap = static_cast<std::size_t>(v.alphabet_size() - 1);
  if (v.size() < gap) throw precondition_error("encode: word shorter than n-1");
  if (auto bad = v.first_non_distinct_window()) throw pansiot_error("encode: repeated letter in window", *bad);
  std::vector<std::uint8_t> bits(v.size() - gap);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = v[i] == v[i + gap] ? 0 : 1;
  return BinaryWord(std::move(bits));
}

/// Rolling decoder. The letter absent from the current (n-1)-window is the
/// only one a 1-bit may append: 0 forces v_{i+n-1} = v_i, and a 1 excludes
/// v_i while window-distinctness excludes the other n-2 letters.
class PansiotDecoder {
 public:
  explicit PansiotDecoder(const SigmaWord& prefix) : word_(prefix) {
    const int n = prefix.alphabet_size();
    if (prefix.size() != static_cast<std::size_t>(n - 1))
      throw precondition_error("decode: prefix must have length n-1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (auto a : prefix) {
      if (seen[a]) throw precondition_error("decode: prefix letters are not distinct");
      seen[a] = true;
    }
    for (int a = 1; a <= n; ++a) {
      if (!seen[static_cast<std::size_t>(a)]) absent_ = static_cast<std::uint8_t>(a);
    }
  }

  /// Appends the letter selected by `bit` and returns it.
  std::uint8_t push(std::uint8_t bit) {
    const std::size_t oldest = word_.size() - gap();
    const std::uint8_t leaving = word_[oldest];
    std::uint8_t next = leaving;
    if (bit != 0) {
      next = absent_;
      absent_ = leaving;
    }
    word_.push_back(next);
    return next;
  }

  /// The letter of {1..n} missing from the last n-1 letters.
  std::uint8_t absent() const noexcept { return absent_; }
  const SigmaWord& word() const noexcept { return word_; }
  SigmaWord take() && { return std::move(word_); }

 private:
  std::size_t gap() const noexcept { return static_cast<std::size_t>(word_.alphabet_size() - 1); }

  SigmaWord word_;
  std::uint8_t absent_ = 0;
};

/// The unique Pansiot-valid word with the given prefix and encoding `b`.
inline SigmaWord decode(const BinaryWord& b, const SigmaWord& prefix) {
  PansiotDecoder dec(prefix);
  for (auto bit : b) dec.push(bit);
  return std::move(dec).take();
}

}  // namespace dejean
