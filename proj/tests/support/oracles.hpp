#pragma once

// Frozen outputs of tests/oracles/readability_oracle.py on
// tests/data/readability_reference.txt.
namespace vt_test::readability_reference {

inline constexpr int words = 85;
inline constexpr int sentences = 10;
inline constexpr int syllables = 164;
inline constexpr int characters = 496;
inline constexpr int complex_words = 22;
inline constexpr double fri = 34.97926470588237;
inline constexpr double fki = 10.492058823529415;
inline constexpr double gfi = 13.75294117647059;
inline constexpr double cli = 13.991529411764699;
inline constexpr double ari = 10.304235294117646;
inline constexpr double msi = 11.602472056035307;

}  // namespace vt_test::readability_reference
