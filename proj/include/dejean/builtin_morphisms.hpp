#pragma once

// The uniform binary morphisms h_15 ... h_26 in stanza form. Parsed once by
// builtin_morphisms() in morphisms.hpp.

#include <string_view>

namespace dejean::data {

inline constexpr std::string_view kBuiltinMorphismStanzas = R"(# Uniform morphisms for alphabet sizes 15..26.
# Each pair satisfies |h0| = |h1| = 4n-4 (4n when n = 21).

n=15
r=56
h0=01101101011011011011010101101010110110110110110101101101
h1=10101011011011010110101101101011010110110110101101010101

n=16
r=60
h0=101010110110110101101101101010101010101010110101010101010101
h1=011010110110110110101101101010110110101010110101010101010101

n=17
r=64
h0=1010101010101010101101101011011010101010101011010110110110101101
h1=1010101010101010101101101101101010101010110110110110110110110110

n=18
r=68
h0=10101010101101101101010110110101011011011010101011010110110101010101
h1=01101010101101101010110110110101011011011010101011010101010101010101

n=19
r=72
h0=101010101010101010101101101010110110101010101010101101011010110110101101
h1=101010101010101010101101101011011010101010101011011011011010110110110110

n=20
r=76
h0=1010101010101010101011011011010101010101011011011011011010110101011011010101
h1=1010101010101010101011011011010101101101011011011011010110110101011011010110

n=21
r=84
h0=101010101010101010101011011010101010101101101010101010110110110110101010101010101101
h1=101010101010101010101011011010101010110110101010101010110101101010101010101010110110

n=22
r=84
h0=101010101010101010101011010101010101010101010101101101101101101011011011011011010101
h1=101010101010101010101011010101010101011011010101101101101101011011011011011011010110

n=23
r=88
h0=1010101010101010101010101010101010101011011010110110110110101011010110110110110110101101
h1=1010101010101010101010101010101010101101101010110110110110110110110110110110110110110110

n=24
r=92
h0=10101010101010101010101011010101101101010101010101011010101010110110101101101101011011010101
h1=10101010101010101010101011010101101101010110110101011010101010110101101101101101011011010110

n=25
r=96
h0=101010101010101010101010101011011010101011011010110110110101101101011010101010101011011010110110
h1=101010101010101010101010101011011010101010110110110110110101101101101101101010101011011010101101

n=26
r=100
h0=1010101010101010101010101011010101010101101101010101010110110110101101011010110110110110110110110101
h1=1010101010101010101010101011010101010101101101101101010110110110101101010110110110110110110110110110
)";

}  // namespace dejean::data
