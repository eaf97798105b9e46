#ifndef TWISTSUB_VERIFICATION_HPP_
#define TWISTSUB_VERIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twistsub/stallings.hpp"
#include "twistsub/word.hpp"

namespace twistsub::verification {

struct CaseResult {
  std::string label;
  bool passed;
  std::string detail;  // empty when there is nothing to add
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::optional<std::int64_t> kmax;  // suite default when unset
  std::optional<std::size_t> count;  // randomized instance count
  std::uint64_t seed = 20240611;
};

/// Suite names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name. "all" runs every suite.
std::vector<SuiteReport> run_suite(std::string_view name,
                                   const SuiteOptions& options = {});

// Generators shared by the randomized suites and the tests.

TwistWord random_word(std::mt19937_64& rng, std::size_t length);
TwistWord random_reduced_word(std::mt19937_64& rng, std::size_t length);

/// Uniformly random complete folded graph on `vertices` vertices (a random
/// transitive pair of permutations).
StallingsGraph random_complete_graph(std::mt19937_64& rng,
                                     std::size_t vertices);

}  // namespace twistsub::verification

#endif  // TWISTSUB_VERIFICATION_HPP_
