#include "twistsub/serialization.hpp"

#include <stdexcept>

namespace twistsub {

namespace {

Json relation_to_json(const Relation& r) {
  if (std::holds_alternative<EqualToFullGroup>(r)) return "equal";
  if (const auto* f = std::get_if<ProperFiniteIndex>(&r)) {
    Json j = Json::object();
    j["finite_index"] = f->index;
    return j;
  }
  return "infinite_index";
}

Relation relation_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "equal") return EqualToFullGroup{};
    if (s == "infinite_index") return ProperInfiniteIndex{};
  } else if (j.is_object() && j.size() == 1 && j.contains("finite_index")) {
    return ProperFiniteIndex{j.at("finite_index").get<std::uint64_t>()};
  }
  throw std::invalid_argument("malformed relation: " + j.dump());
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j = Json::object();
  j["name"] = c.name;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["passed"] = c.passed;
  j["derived"] = c.derived;
  return j;
}

Json to_json(const Verdict& v, const std::vector<Certificate>& certificates) {
  Json j = Json::object();
  j["group"] = to_string(v.group_class);
  j["relation"] = relation_to_json(v.relation);
  j["full_group"] = to_string(v.full_group_class);
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  return j;
}

Json to_json(const CertificateBundle& bundle) {
  return to_json(bundle.verdict, bundle.certificates);
}

Verdict verdict_from_json(const Json& j) {
  return {parse_group_class(j.at("group").get<std::string>()),
          relation_from_json(j.at("relation")),
          parse_group_class(j.at("full_group").get<std::string>())};
}

std::vector<Certificate> certificates_from_json(const Json& j) {
  std::vector<Certificate> out;
  for (const auto& c : j.at("certificates")) {
    out.push_back({c.at("name").get<std::string>(),
                   c.at("expected").get<std::string>(),
                   c.at("observed").get<std::string>(),
                   c.at("passed").get<bool>(), c.at("derived").get<bool>()});
  }
  return out;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace twistsub
