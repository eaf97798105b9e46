#ifndef TWISTSUB_CLASSIFIER_HPP_
#define TWISTSUB_CLASSIFIER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twistsub/representations.hpp"
#include "twistsub/word.hpp"

namespace twistsub {

/// Isomorphism types that occur for G = <X, T_a> and for <T_a, T_b>.
enum class GroupClass : std::uint8_t { Z, Z2, F2, B3, SL2Z, Z2xZ };

std::string to_string(GroupClass g);
GroupClass parse_group_class(std::string_view text);

struct EqualToFullGroup {
  friend bool operator==(EqualToFullGroup, EqualToFullGroup) = default;
};
struct ProperFiniteIndex {
  std::uint64_t index;
  friend bool operator==(ProperFiniteIndex, ProperFiniteIndex) = default;
};
struct ProperInfiniteIndex {
  friend bool operator==(ProperInfiniteIndex, ProperInfiniteIndex) = default;
};

using Relation =
    std::variant<EqualToFullGroup, ProperFiniteIndex, ProperInfiniteIndex>;

/// Index of G in <T_a, T_b> implied by a relation.
Index index_of(const Relation& r);

struct Verdict {
  GroupClass group_class;
  Relation relation;
  GroupClass full_group_class;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Isomorphism type of <T_a, T_b> in the given context.
GroupClass full_group_class(const SurfaceContext& ctx);

/// Total decision procedure for the structure of G = <X, T_a>.
Verdict classify(const XSpec& x, const SurfaceContext& ctx);

// ---------------------------------------------------------------------------
// Conjugates of T_a by powers of X (i(a, b) = 1).

enum class ConjClass : std::uint8_t { A, B, ABAinv, BABinv, AinvBA };

std::string to_string(ConjClass c);
/// The canonical word: a, b, abA, baB or Aba.
TwistWord conj_word(ConjClass c);

enum class ConjDirection : std::uint8_t {
  ByX,         // X T_a X^-1
  ByXInverse,  // X^-1 T_a X
};

/// Table value of the conjugate of T_a by X (or X^-1). Throws
/// std::invalid_argument for k = 0.
ConjClass conjugation_class(const XSpec& x, ConjDirection direction);

// ---------------------------------------------------------------------------
// Words over {X, X^-1, Y, Y^-1} producing T_b (i(a, b) = 1, 3 does not
// divide k).

struct MetaLetter {
  enum class Symbol : std::uint8_t { X, Y } symbol;
  int sign;
  friend bool operator==(MetaLetter, MetaLetter) = default;
};
using MetaWord = std::vector<MetaLetter>;

/// e.g. "X Y X^-1"
std::string to_string(const MetaWord& w);

/// Replaces X and Y by the given twist words (no reduction).
TwistWord substitute(const MetaWord& w, const TwistWord& x,
                     const TwistWord& y);

class NoWitnessError : public std::domain_error {
 public:
  NoWitnessError()
      : std::domain_error(
            "no witness exists: T_b is not in G when k is a multiple of 3") {}
};

/// Word in X, Y that equals T_b. Throws NoWitnessError when 3 | k.
MetaWord generation_witness(const XSpec& x);

// ---------------------------------------------------------------------------
// Relation checks and certificates.

struct NamedCheck {
  std::string name;
  bool passed;
};

/// Braid, chain and centrality relations in an i(a, b) = 1 context. Throws
/// std::invalid_argument otherwise.
std::vector<NamedCheck> verify_relations(const SurfaceContext& ctx);

/// One independent computation supporting a verdict.
struct Certificate {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed;
  bool derived = false;  // covers k = 0, which the classification does not state

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::logic_error("internal consistency failure: " + what) {}
};

struct CertificateBundle {
  Verdict verdict;
  std::vector<Certificate> certificates;
};

/// Computes the certificates for (x, ctx) against the given verdict without
/// throwing; entries with passed == false are mismatches.
std::vector<Certificate> collect_certificates(const XSpec& x,
                                              const SurfaceContext& ctx,
                                              const Verdict& verdict);

/// classify() together with its certificates. Throws ConsistencyError if
/// any certificate disagrees with the verdict.
CertificateBundle certify(const XSpec& x, const SurfaceContext& ctx);

}  // namespace twistsub

#endif  // TWISTSUB_CLASSIFIER_HPP_
