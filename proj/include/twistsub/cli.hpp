#ifndef TWISTSUB_CLI_HPP_
#define TWISTSUB_CLI_HPP_

#include <string>
#include <vector>

#include "twistsub/classifier.hpp"

namespace twistsub::cli {

enum class OutputMode { Human, Json };

/// Exit codes: 0 success or true, 1 false or negative result, 2 usage or
/// input error.
struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one invocation. `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// Human mode gives a sentence such as
/// "G ≅ ℤ₂ × ℤ, infinite index in ⟨T_a,T_b⟩ ≅ SL₂(ℤ)"; JSON mode gives the
/// verdict document.
std::string format_verdict(const Verdict& v, OutputMode mode,
                           const std::vector<Certificate>& certificates = {});

}  // namespace twistsub::cli

#endif  // TWISTSUB_CLI_HPP_
