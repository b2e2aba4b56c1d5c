#pragma once

// Uniform binary morphisms: application, prefixes of the limit word, factor
// sets, and the stanza file format.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dejean/builtin_morphisms.hpp"
#include "dejean/words.hpp"

namespace dejean {

/// A binary morphism with |h(0)| = |h(1)| = r, tagged with the alphabet size
/// n it is meant to serve.
class UniformMorphism {
 public:
  UniformMorphism(int n, BinaryWord image0, BinaryWord image1)
      : n_(n), image0_(std::move(image0)), image1_(std::move(image1)) {
    if (n_ < 2 || n_ > SigmaWord::kMaxAlphabet) throw precondition_error("UniformMorphism: n must lie in 2..255");
    if (image0_.empty()) throw precondition_error("UniformMorphism: images must be non-empty");
    if (image0_.size() != image1_.size()) throw precondition_error("UniformMorphism: images differ in length");
    std::size_t lcp = 0;
    while (lcp < image0_.size() && image0_[lcp] == image1_[lcp]) ++lcp;
    eta_prime_ = image0_.substr(0, lcp);
  }

  int n() const noexcept { return n_; }
  std::size_t r() const noexcept { return image0_.size(); }
  const BinaryWord& image0() const noexcept { return image0_; }
  const BinaryWord& image1() const noexcept { return image1_; }
  const BinaryWord& image(std::uint8_t letter) const noexcept { return letter == 0 ? image0_ : image1_; }

  /// Longest common prefix of the two images.
  const BinaryWord& eta_prime() const noexcept { return eta_prime_; }

  friend bool operator==(const UniformMorphism& a, const UniformMorphism& b) {
    return a.n_ == b.n_ && a.image0_ == b.image0_ && a.image1_ == b.image1_;
  }

 private:
  int n_;
  BinaryWord image0_;
  BinaryWord image1_;
  BinaryWord eta_prime_;
};

inline BinaryWord apply(const UniformMorphism& h, const BinaryWord& w) {
  std::vector<std::uint8_t> out;
  out.reserve(h.r() * w.size());
  for (auto letter : w) {
    const auto& img = h.image(letter);
    out.insert(out.end(), img.begin(), img.end());
  }
  return BinaryWord(std::move(out));
}

inline BinaryWord apply(const UniformMorphism& h, std::string_view bits) {
  return apply(h, BinaryWord::parse(bits));
}

/// The morphism a -> reverse(h(a)). Its limit words are mirror images of
/// those of h, and reversal commutes with Pansiot encoding, so power
/// freeness transfers between h and mirror(h).
inline UniformMorphism mirror(const UniformMorphism& h) {
  auto rev = [](const BinaryWord& w) {
    std::vector<std::uint8_t> s = w.symbols();
    std::ranges::reverse(s);
    return BinaryWord(std::move(s));
  };
  return UniformMorphism(h.n(), rev(h.image0()), rev(h.image1()));
}

/// Raised when iterating h^2 from 0 does not extend the previous iterate.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The first min_length letters of the limit of h^2, h^4, ... applied to
/// `seed`. Each iterate is checked to extend the previous one; limit_error
/// is thrown otherwise. Only the prefix needed for the next iterate is
/// expanded.
inline BinaryWord limit_prefix(const UniformMorphism& h, std::size_t min_length, std::uint8_t seed) {
  if (min_length == 0) throw precondition_error("limit_prefix: min_length must be >= 1");
  if (seed > 1) throw precondition_error("limit_prefix: seed must be 0 or 1");
  const std::size_t r2 = h.r() * h.r();
  BinaryWord cur(std::vector<std::uint8_t>{seed});
  while (true) {
    const std::size_t needed = (min_length + r2 - 1) / r2;
    BinaryWord next = apply(h, apply(h, cur.substr(0, std::min(cur.size(), needed))));
    const std::size_t common = std::min(cur.size(), next.size());
    if (!std::equal(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(common), next.begin()))
      throw limit_error("limit_prefix: h^2 iterate from " + std::to_string(seed) + " is not prefix-stable");
    if (next.size() >= min_length) return next.substr(0, min_length);
    if (next.size() <= cur.size()) throw limit_error("limit_prefix: h^2 iterate does not grow");
    cur = std::move(next);
  }
}

/// The letter the limit word grows from: 0 when h^2(0) begins with 0,
/// otherwise 1 when h^2(1) begins with 1.
///
/// Most of the embedded morphisms have both images beginning with 1, so
/// h^2(0) begins with 1 and no limit grows from 0. When both images contain
/// both letters the two candidate limits share the same set of factors, and
/// factor sets are all the checks here depend on.
inline std::uint8_t limit_seed(const UniformMorphism& h) {
  const auto first_of_square = [&](std::uint8_t a) { return h.image(h.image(a)[0])[0]; };
  if (first_of_square(0) == 0) return 0;
  if (first_of_square(1) == 1) return 1;
  throw limit_error("limit_seed: h^2 fixes neither 0 nor 1 as a first letter");
}

/// limit_prefix from limit_seed(h).
inline BinaryWord limit_prefix(const UniformMorphism& h, std::size_t min_length) {
  return limit_prefix(h, min_length, limit_seed(h));
}

/// The set of all length-k factors of the limit word.
struct FactorSet {
  std::size_t length = 0;
  std::set<BinaryWord> members;

  bool contains(const BinaryWord& w) const { return members.contains(w); }
  std::size_t size() const noexcept { return members.size(); }
};

/// Inserts every length-k factor of w into out; returns the newly added ones.
inline std::vector<BinaryWord> collect_factors(const BinaryWord& w, std::size_t k, std::set<BinaryWord>& out) {
  std::vector<BinaryWord> added;
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    auto [it, inserted] = out.insert(w.substr(i, k));
    if (inserted) added.push_back(*it);
  }
  return added;
}

/// Least fixed point of S -> S + {length-k factors of h(y) : y a length-m
/// factor of a member of S}, m = floor((k + 2(r-1)) / r), seeded with the
/// length-k factors of a limit-word prefix of length k.
///
/// Every length-k factor of h(P) lies in h(y) for a factor y of P of length
/// at most m <= k, so a closed set holding the factors of a prefix P also
/// holds those of h(P), h^2(P), ...; the result is therefore complete.
inline FactorSet factor_closure(const UniformMorphism& h, std::size_t k) {
  if (k == 0) throw precondition_error("factor_closure: k must be >= 1");
  const std::size_t r = h.r();
  const std::size_t m = (k + 2 * (r - 1)) / r;
  FactorSet result{k, {}};
  std::deque<BinaryWord> work;
  for (auto& w : collect_factors(limit_prefix(h, std::max(k, m)), k, result.members)) work.push_back(std::move(w));
  std::set<BinaryWord> expanded;
  while (!work.empty()) {
    const BinaryWord member = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i + m <= member.size(); ++i) {
      BinaryWord y = member.substr(i, m);
      if (!expanded.insert(y).second) continue;
      for (auto& w : collect_factors(apply(h, y), k, result.members)) work.push_back(std::move(w));
    }
  }
  return result;
}

/// floor((floor((ell + 2(r-1)) / r) + 2(r-1)) / r): the length bound on u3
/// when a factor of length ell is a factor of h^2(u3).
inline std::int64_t iterate_bound(std::int64_t ell, std::int64_t r) {
  if (ell < 1 || r < 2) throw precondition_error("iterate_bound: requires ell >= 1 and r >= 2");
  return ((ell + 2 * (r - 1)) / r + 2 * (r - 1)) / r;
}

// ---------------------------------------------------------------------------
// Stanza files
//
//   # comment
//   n=15
//   r=56
//   h0=0110...
//   h1=1010...
//
// Stanzas are separated by blank lines.

class morphism_parse_error : public std::runtime_error {
 public:
  morphism_parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Stanza {
  std::size_t first_line = 0;
  std::optional<long> n, r;
  std::optional<std::string> h0, h1;
  std::size_t h0_line = 0, h1_line = 0;

  bool empty() const { return !n && !r && !h0 && !h1; }

  UniformMorphism finish() const {
    if (!n || !r || !h0 || !h1) throw morphism_parse_error("stanza is missing one of n, r, h0, h1", first_line);
    auto bits = [](const std::string& s, std::size_t line) {
      try {
        return BinaryWord::parse(s);
      } catch (const parse_error& e) {
        throw morphism_parse_error(std::string("non-binary symbol: ") + e.what(), line);
      }
    };
    BinaryWord b0 = bits(*h0, h0_line);
    BinaryWord b1 = bits(*h1, h1_line);
    if (b0.size() != static_cast<std::size_t>(*r))
      throw morphism_parse_error("h0 has length " + std::to_string(b0.size()) + ", expected r=" + std::to_string(*r), h0_line);
    if (b1.size() != static_cast<std::size_t>(*r))
      throw morphism_parse_error("h1 has length " + std::to_string(b1.size()) + ", expected r=" + std::to_string(*r), h1_line);
    if (*r < 1) throw morphism_parse_error("r must be positive", first_line);
    if (*n < 2 || *n > SigmaWord::kMaxAlphabet) throw morphism_parse_error("n must lie in 2..255", first_line);
    return UniformMorphism(static_cast<int>(*n), std::move(b0), std::move(b1));
  }
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline long parse_integer(std::string_view s, std::size_t line) {
  if (s.empty() || s.size() > 9) throw morphism_parse_error("expected an integer", line);
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw morphism_parse_error("expected an integer", line);
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

inline std::vector<UniformMorphism> parse_morphism_file(std::string_view text) {
  std::vector<UniformMorphism> out;
  detail::Stanza cur;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur.finish());
    cur = detail::Stanza{};
  };
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw morphism_parse_error("expected key=value", line_no);
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (cur.empty()) cur.first_line = line_no;
    auto once = [&](bool present) {
      if (present) throw morphism_parse_error("duplicate key '" + std::string(key) + "'", line_no);
    };
    if (key == "n") {
      once(cur.n.has_value());
      cur.n = detail::parse_integer(value, line_no);
    } else if (key == "r") {
      once(cur.r.has_value());
      cur.r = detail::parse_integer(value, line_no);
    } else if (key == "h0") {
      once(cur.h0.has_value());
      cur.h0 = std::string(value);
      cur.h0_line = line_no;
    } else if (key == "h1") {
      once(cur.h1.has_value());
      cur.h1 = std::string(value);
      cur.h1_line = line_no;
    } else {
      throw morphism_parse_error("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  flush();
  return out;
}

/// Stanzas in ascending n.
inline std::string emit_morphism_file(std::vector<UniformMorphism> morphisms) {
  std::ranges::stable_sort(morphisms, {}, &UniformMorphism::n);
  std::ostringstream os;
  bool first = true;
  for (const auto& h : morphisms) {
    if (!first) os << '\n';
    first = false;
    os << "n=" << h.n() << "\nr=" << h.r() << "\nh0=" << h.image0().str() << "\nh1=" << h.image1().str() << '\n';
  }
  return os.str();
}

/// The twelve embedded morphisms, ascending n.
inline const std::vector<UniformMorphism>& builtin_morphisms() {
  static const std::vector<UniformMorphism> all = parse_morphism_file(data::kBuiltinMorphismStanzas);
  return all;
}

inline constexpr int kBuiltinMinN = 15;
inline constexpr int kBuiltinMaxN = 26;

inline const UniformMorphism& builtin(int n) {
  if (n < kBuiltinMinN || n > kBuiltinMaxN)
    throw precondition_error("builtin: no embedded morphism for n=" + std::to_string(n));
  return builtin_morphisms()[static_cast<std::size_t>(n - kBuiltinMinN)];
}

/// 4n-4, or 4n for n = 21.
inline std::size_t builtin_length(int n) {
  return static_cast<std::size_t>(n == 21 ? 4 * n : 4 * n - 4);
}

}  // namespace dejean
