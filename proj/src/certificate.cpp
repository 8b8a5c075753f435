#include "resolvekit/certificate.hpp"

#include "resolvekit/errors.hpp"

namespace resolvekit {

const char* to_string(Verdict verdict) noexcept {
  return verdict == Verdict::kResolving ? "resolving" : "not-resolving";
}

const char* to_string(ObjectKind kind) noexcept {
  return kind == ObjectKind::kSet ? "set" : "partition";
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(cert.verdict);
  j["witness"] = cert.witness ? nlohmann::ordered_json::array({cert.witness->first, cert.witness->second})
                              : nlohmann::ordered_json(nullptr);
  j["kind"] = to_string(cert.kind);
  if (cert.kind == ObjectKind::kSet) {
    j["object"] = cert.object.empty() ? std::vector<Vertex>{} : cert.object.front();
  } else {
    j["object"] = cert.object;
  }
  j["graph_sha"] = cert.graph_sha;
  return j;
}

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    Certificate cert;
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "resolving") {
      cert.verdict = Verdict::kResolving;
    } else if (verdict == "not-resolving") {
      cert.verdict = Verdict::kNotResolving;
    } else {
      throw ContractViolation("unknown verdict '" + verdict + "'");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "set") {
      cert.kind = ObjectKind::kSet;
      cert.object = {j.at("object").get<std::vector<Vertex>>()};
    } else if (kind == "partition") {
      cert.kind = ObjectKind::kPartition;
      cert.object = j.at("object").get<std::vector<std::vector<Vertex>>>();
    } else {
      throw ContractViolation("unknown object kind '" + kind + "'");
    }
    if (!j.at("witness").is_null()) {
      const auto pair = j.at("witness").get<std::vector<Vertex>>();
      if (pair.size() != 2) throw ContractViolation("witness must be a pair");
      cert.witness = {pair[0], pair[1]};
    }
    if (cert.witness.has_value() == (cert.verdict == Verdict::kResolving)) {
      throw ContractViolation("witness present iff not resolving");
    }
    cert.graph_sha = j.at("graph_sha").get<std::string>();
    return cert;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ContractViolation(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace resolvekit
