#ifndef TWISTSUB_WORD_HPP_
#define TWISTSUB_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistsub {

/// The two twist generators: A stands for T_a, B for T_b.
enum class Gen : std::uint8_t { A, B };

struct Letter {
  Gen gen = Gen::A;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, -sign}; }
  constexpr bool cancels(Letter other) const {
    return gen == other.gen && sign == -other.sign;
  }
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

inline constexpr Letter kA{Gen::A, 1};
inline constexpr Letter kAInv{Gen::A, -1};
inline constexpr Letter kB{Gen::B, 1};
inline constexpr Letter kBInv{Gen::B, -1};

/// Default cap on the number of letters any expansion may produce.
inline constexpr std::size_t kDefaultMaxLetters = 1'000'000;

/// Thrown by parse_word for input outside the word grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when a power or expansion would exceed the configured letter cap.
class ExpansionLimitError : public std::length_error {
 public:
  explicit ExpansionLimitError(std::size_t cap);
};

/// A finite sequence of letters. No implicit reduction is ever applied;
/// call free_reduce() explicitly.
class TwistWord {
 public:
  TwistWord() = default;
  TwistWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit TwistWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool is_reduced() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
  friend auto operator<=>(const TwistWord&, const TwistWord&) = default;

  /// Canonical spelling: a, b, A (= a^-1), B (= b^-1); empty word is "".
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

TwistWord parse_word(std::string_view text,
                     std::size_t max_letters = kDefaultMaxLetters);

TwistWord free_reduce(const TwistWord& w);
TwistWord invert(const TwistWord& w);
TwistWord concat(const TwistWord& u, const TwistWord& v);
TwistWord concat(std::initializer_list<TwistWord> parts);

/// w^n for any integer n (inverse powers for n < 0, empty word for n = 0).
TwistWord power(const TwistWord& w, std::int64_t n,
                std::size_t max_letters = kDefaultMaxLetters);

/// (exponent sum of a, exponent sum of b).
std::pair<std::int64_t, std::int64_t> exponent_sums(const TwistWord& w);

enum class XForm : std::uint8_t { AB, BA };

/// X = (T_a T_b)^k for form AB, (T_b T_a)^k for form BA.
struct XSpec {
  XForm form = XForm::AB;
  std::int64_t k = 0;
  friend bool operator==(const XSpec&, const XSpec&) = default;
};

TwistWord expand_xform(const XSpec& x,
                       std::size_t max_letters = kDefaultMaxLetters);

std::string to_string(XForm form);
XForm parse_xform(std::string_view text);

}  // namespace twistsub

#endif  // TWISTSUB_WORD_HPP_
