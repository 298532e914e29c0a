#include "ordercert/free_word.hpp"

#include <cctype>
#include <stdexcept>

namespace ordercert {

FreeWord::FreeWord(std::vector<Syllable> syllables) {
  for (auto& s : syllables) {
    if (s.exponent == 0) continue;
    if (!syllables_.empty() && syllables_.back().atom == s.atom) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(std::move(s));
    }
  }
}

FreeWord FreeWord::atom(std::string name, long exponent) { return FreeWord({{std::move(name), exponent}}); }

std::string FreeWord::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.atom;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::set<std::string> FreeWord::atoms() const {
  std::set<std::string> out;
  for (const auto& s : syllables_) out.insert(s.atom);
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeWord::Syllable> all = a.syllables_;
  all.insert(all.end(), b.syllables_.begin(), b.syllables_.end());
  return FreeWord(std::move(all));
}

FreeWord inverse(const FreeWord& w) {
  std::vector<FreeWord::Syllable> out;
  out.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) out.push_back({it->atom, -it->exponent});
  return FreeWord(std::move(out));
}

FreeWord power(const FreeWord& w, long n) {
  if (n < 0) return power(inverse(w), -n);
  FreeWord out;
  for (long i = 0; i < n; ++i) out = out * w;
  return out;
}

FreeWord conjugate(const FreeWord& w, const FreeWord& by) { return inverse(by) * w * by; }

FreeWord epsilon_word(const FreeWord& a, const FreeWord& c, const FreeWord& d) {
  FreeWord out;
  for (long k = 0; k < 6; ++k) out = out * conjugate(c, d * power(a, k));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FreeWord parse_all() {
    FreeWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '^' && c != '(' && c != ')';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  FreeWord word() {
    FreeWord out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      out = out * term();
    }
  }

  FreeWord term() {
    FreeWord base = primary();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+' ||
                                  std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        base = power(base, integer());
      } else {
        base = conjugate(base, primary());
      }
    }
    return base;
  }

  FreeWord primary() {
    if (pos_ == text_.size()) fail("expected a name or '('");
    if (text_[pos_] == '(') {
      ++pos_;
      FreeWord inner = word();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    std::string name(text_.substr(start, pos_ - start));
    if (name == "1") return {};
    if (std::isdigit(static_cast<unsigned char>(name.front())) || name.front() == '-') {
      fail("atom names may not start with a digit or '-'");
    }
    return FreeWord::atom(std::move(name));
  }

  long integer() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      const long v = std::stol(digits, &used);
      if (used != digits.size()) fail("bad exponent");
      return v;
    } catch (const std::logic_error&) {
      fail("bad exponent '" + digits + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord FreeWord::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace ordercert
