#include "twistsub/word.hpp"

#include <charconv>
#include <limits>

namespace twistsub {

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error("syntax error at position " +
                         std::to_string(position) + ": " + message),
      position_(position) {}

ExpansionLimitError::ExpansionLimitError(std::size_t cap)
    : std::length_error("word expansion exceeds the limit of " +
                        std::to_string(cap) + " letters") {}

bool TwistWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1].cancels(letters_[i])) return false;
  }
  return true;
}

std::string TwistWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (l.gen == Gen::A) {
      out.push_back(l.sign > 0 ? 'a' : 'A');
    } else {
      out.push_back(l.sign > 0 ? 'b' : 'B');
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for
//   word   := term+
//   term   := letter ["^" int] | "(" word ")" ["^" int]
//   letter := a | b | A | B
//   int    := ["-"] digit+
class Parser {
 public:
  Parser(std::string_view text, std::size_t max_letters)
      : text_(text), max_letters_(max_letters) {}

  TwistWord parse() {
    skip_space();
    if (at_end()) return {};
    TwistWord w = parse_word();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return w;
  }

 private:
  TwistWord parse_word() {
    std::vector<Letter> out;
    skip_space();
    if (at_end() || peek() == ')') fail("expected a letter or '('");
    while (true) {
      skip_space();
      if (at_end() || peek() == ')') break;
      TwistWord term = parse_term();
      if (out.size() + term.size() > max_letters_) {
        throw ExpansionLimitError(max_letters_);
      }
      out.insert(out.end(), term.begin(), term.end());
    }
    return TwistWord(std::move(out));
  }

  TwistWord parse_term() {
    TwistWord base;
    char c = peek();
    switch (c) {
      case 'a': base = {kA}; break;
      case 'A': base = {kAInv}; break;
      case 'b': base = {kB}; break;
      case 'B': base = {kBInv}; break;
      case '(': {
        std::size_t open = pos_;
        ++pos_;
        base = parse_word();
        skip_space();
        if (at_end()) {
          pos_ = open;
          fail("unbalanced '('");
        }
        break;  // peek() == ')'
      }
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
    ++pos_;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return power(base, parse_int(), max_letters_);
    }
    return base;
  }

  std::int64_t parse_int() {
    skip_space();
    std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && peek() >= '0' && peek() <= '9') ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("missing exponent after '^'");
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("exponent out of range");
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r')) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t max_letters_;
  std::size_t pos_ = 0;
};

}  // namespace

TwistWord parse_word(std::string_view text, std::size_t max_letters) {
  return Parser(text, max_letters).parse();
}

TwistWord free_reduce(const TwistWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TwistWord(std::move(stack));
}

TwistWord invert(const TwistWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return TwistWord(std::move(out));
}

TwistWord concat(const TwistWord& u, const TwistWord& v) {
  return concat({u, v});
}

TwistWord concat(std::initializer_list<TwistWord> parts) {
  std::vector<Letter> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return TwistWord(std::move(out));
}

TwistWord power(const TwistWord& w, std::int64_t n, std::size_t max_letters) {
  if (n == 0 || w.empty()) return {};
  // |n| without overflow for INT64_MIN
  const auto count = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                           : static_cast<std::uint64_t>(n);
  if (count > max_letters / w.size()) throw ExpansionLimitError(max_letters);
  const TwistWord unit = n < 0 ? invert(w) : w;
  std::vector<Letter> out;
  out.reserve(unit.size() * count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.insert(out.end(), unit.begin(), unit.end());
  }
  return TwistWord(std::move(out));
}

std::pair<std::int64_t, std::int64_t> exponent_sums(const TwistWord& w) {
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (Letter l : w) (l.gen == Gen::A ? sa : sb) += l.sign;
  return {sa, sb};
}

TwistWord expand_xform(const XSpec& x, std::size_t max_letters) {
  const TwistWord unit =
      x.form == XForm::AB ? TwistWord{kA, kB} : TwistWord{kB, kA};
  return power(unit, x.k, max_letters);
}

std::string to_string(XForm form) { return form == XForm::AB ? "ab" : "ba"; }

XForm parse_xform(std::string_view text) {
  if (text == "ab" || text == "AB") return XForm::AB;
  if (text == "ba" || text == "BA") return XForm::BA;
  throw std::invalid_argument("unknown X-form '" + std::string(text) +
                              "' (expected ab or ba)");
}

}  // namespace twistsub
