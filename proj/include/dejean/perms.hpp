#pragma once

// Permutations of {1..n} and the homomorphism sigma from binary words into
// the symmetric group.
//
// Products follow (f*g)(i) = f(g(i)). With that convention sigma is a
// homomorphism in reading order, sigma(uv) = sigma(u) * sigma(v), and for a
// word v with prefix 1 2 ... (n-1) the permutation sigma(encode(v)) sends
// (1, ..., n) to (last n-1 letters of v, the letter absent from them).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dejean/words.hpp"

namespace dejean {

class Permutation {
 public:
  /// Images of 1..n in order; must be a bijection of {1..n}.
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    if (n == 0 || n > 255) throw precondition_error("Permutation: degree must lie in 1..255");
    std::vector<bool> hit(n + 1, false);
    for (auto v : images_) {
      if (v < 1 || v > n || hit[v]) throw precondition_error("Permutation: images are not a bijection");
      hit[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return Permutation(std::move(img));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  /// Image of the point i (1-based).
  std::uint8_t operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint8_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1u] = static_cast<std::uint8_t>(i + 1);
    return Permutation(std::move(inv), unchecked{});
  }

  /// (f * g)(i) = f(g(i)).
  friend Permutation operator*(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree()) throw precondition_error("Permutation: degree mismatch");
    std::vector<std::uint8_t> out(g.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.images_[g.images_[i] - 1u];
    return Permutation(std::move(out), unchecked{});
  }

  /// Cycle lengths, largest first; they sum to the degree.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::size_t len = 0;
      for (std::size_t i = start; !seen[i]; i = images_[i] - 1u) {
        seen[i] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::ranges::sort(lengths, std::greater<>{});
    return lengths;
  }

  /// One-line form, e.g. "(2 3 1)".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) s.push_back(' ');
      s += std::to_string(images_[i]);
    }
    s.push_back(')');
    return s;
  }

  /// Byte string usable as a hash key.
  std::string key() const { return std::string(images_.begin(), images_.end()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked {};
  Permutation(std::vector<std::uint8_t> images, unchecked) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

/// 1->2->...->(n-1)->1, fixing n.
inline Permutation sigma0(int n) {
  if (n < 2) throw precondition_error("sigma0: n must be at least 2");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n - 1; ++i) img[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(i + 1);
  img[static_cast<std::size_t>(n - 2)] = 1;
  img[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(n);
  return Permutation(std::move(img));
}

/// 1->2->...->n->1.
inline Permutation sigma1(int n) {
  if (n < 2) throw precondition_error("sigma1: n must be at least 2");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) img[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(i + 1);
  img[static_cast<std::size_t>(n - 1)] = 1;
  return Permutation(std::move(img));
}

namespace detail {

// p <- p * sigma(bit), in place. Both generators shift 1..n-2 up by one, so
// right multiplication rotates the image sequence left.
inline void right_multiply_generator(std::span<std::uint8_t> img, std::uint8_t bit) {
  if (bit == 0) {
    std::rotate(img.begin(), img.begin() + 1, img.end() - 1);
  } else {
    std::rotate(img.begin(), img.begin() + 1, img.end());
  }
}

}  // namespace detail

inline Permutation sigma_word(const BinaryWord& b, int n) {
  std::vector<std::uint8_t> img = Permutation::identity(n).images();
  for (auto bit : b) detail::right_multiply_generator(img, bit);
  return Permutation(std::move(img));
}

inline bool is_kernel(const BinaryWord& b, int n) {
  return sigma_word(b, n).is_identity();
}

/// Every tau with tau*a1*tau^-1 = sigma1(n), in order of tau(1) = 1..n.
/// Empty unless a1 is an n-cycle; otherwise tau*a1 = sigma1*tau pins tau
/// along the cycle of a1 once tau(1) is chosen.
inline std::vector<Permutation> cycle_aligners(const Permutation& a1, int n) {
  std::vector<Permutation> out;
  if (a1.degree() != n) throw precondition_error("cycle_aligners: degree mismatch");
  if (a1.cycle_type() != std::vector<std::size_t>{static_cast<std::size_t>(n)}) return out;
  std::vector<std::uint8_t> tau(static_cast<std::size_t>(n));
  for (int start = 1; start <= n; ++start) {
    int x = 1;
    int y = start;
    for (int k = 0; k < n; ++k) {
      tau[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(y);
      x = a1(x);
      y = y % n + 1;
    }
    out.emplace_back(tau);
  }
  return out;
}

/// The tau with tau*a0*tau^-1 = sigma0(n) and tau*a1*tau^-1 = sigma1(n), if
/// any; the lexicographically least image sequence when several exist.
/// Only the n aligners of a1 are candidates, so this is O(n^2).
inline std::optional<Permutation> find_conjugator(const Permutation& a0, const Permutation& a1, int n) {
  if (a0.degree() != n || a1.degree() != n) throw precondition_error("find_conjugator: degree mismatch");
  const Permutation s0 = sigma0(n);
  std::optional<Permutation> best;
  for (auto& tau : cycle_aligners(a1, n)) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = tau(a0(i)) == s0(tau(i));
    if (ok && (!best || tau < *best)) best = std::move(tau);
  }
  return best;
}

/// sigma of every prefix of a word: table[k] = sigma(word[0, k)).
class PrefixSigmaTable {
 public:
  PrefixSigmaTable(const BinaryWord& word, int n) : n_(n) {
    const std::size_t len = word.size();
    flat_.reserve((len + 1) * static_cast<std::size_t>(n));
    std::vector<std::uint8_t> img = Permutation::identity(n).images();
    flat_.insert(flat_.end(), img.begin(), img.end());
    for (auto bit : word) {
      detail::right_multiply_generator(img, bit);
      flat_.insert(flat_.end(), img.begin(), img.end());
    }
  }

  std::size_t size() const noexcept { return flat_.size() / static_cast<std::size_t>(n_); }
  int degree() const noexcept { return n_; }

  Permutation at(std::size_t k) const {
    auto first = flat_.begin() + static_cast<std::ptrdiff_t>(k * static_cast<std::size_t>(n_));
    return Permutation(std::vector<std::uint8_t>(first, first + n_));
  }

  /// sigma(word[i, j)) = table[i]^-1 * table[j].
  Permutation factor(std::size_t i, std::size_t j) const {
    if (i > j || j >= size()) throw std::out_of_range("PrefixSigmaTable::factor");
    return at(i).inverse() * at(j);
  }

  /// True iff word[i, j) lies in the kernel, i.e. table[i] == table[j].
  bool factor_is_identity(std::size_t i, std::size_t j) const {
    if (i > j || j >= size()) throw std::out_of_range("PrefixSigmaTable::factor_is_identity");
    const auto n = static_cast<std::size_t>(n_);
    return std::equal(flat_.begin() + static_cast<std::ptrdiff_t>(i * n),
                      flat_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n),
                      flat_.begin() + static_cast<std::ptrdiff_t>(j * n));
  }

  std::string_view key(std::size_t k) const {
    const auto n = static_cast<std::size_t>(n_);
    return std::string_view(reinterpret_cast<const char*>(flat_.data() + k * n), n);
  }

 private:
  int n_;
  std::vector<std::uint8_t> flat_;
};

}  // namespace dejean
