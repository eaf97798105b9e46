#ifndef TWISTSUB_SERIALIZATION_HPP_
#define TWISTSUB_SERIALIZATION_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "twistsub/classifier.hpp"

namespace twistsub {

using Json = nlohmann::ordered_json;

// Verdict documents have the shape
//   {"group": "Z2xZ", "relation": "equal" | {"finite_index": n} |
//    "infinite_index", "full_group": "SL2Z", "certificates": [...]}
// with field order fixed as above.

Json to_json(const Certificate& c);
Json to_json(const Verdict& v, const std::vector<Certificate>& certificates);
Json to_json(const CertificateBundle& bundle);

Verdict verdict_from_json(const Json& j);
std::vector<Certificate> certificates_from_json(const Json& j);

/// Two-space indented document followed by a newline.
std::string dump_document(const Json& j);

}  // namespace twistsub

#endif  // TWISTSUB_SERIALIZATION_HPP_
