#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ordercert {

/// Formal product of named atoms with integer exponents, kept freely reduced.
///
/// Words are compared syntactically; group relations enter derivations only
/// through explicitly cited facts.
class FreeWord {
 public:
  struct Syllable {
    std::string atom;
    long exponent = 1;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };

  FreeWord() = default;
  explicit FreeWord(std::vector<Syllable> syllables);
  static FreeWord atom(std::string name, long exponent = 1);

  /// Parses whitespace-separated terms. A term is a primary followed by any
  /// number of `^k` (integer power) or `^x` / `^(w)` (conjugation, x^w =
  /// w^-1 x w). A primary is an atom name, `1`, or a parenthesised word.
  /// Throws std::invalid_argument on malformed input.
  static FreeWord parse(std::string_view text);

  /// Space-separated syllables; "1" for the identity.
  std::string str() const;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::set<std::string> atoms() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, long n);
/// by^-1 w by.
FreeWord conjugate(const FreeWord& w, const FreeWord& by);

/// c^d c^(d a) ... c^(d a^5) as a formal word.
FreeWord epsilon_word(const FreeWord& a, const FreeWord& c, const FreeWord& d);

}  // namespace ordercert
