#pragma once

#include <json.hpp>

#include "resolvekit/resolvability.hpp"

namespace resolvekit {

// {verdict, witness, kind, object, graph_sha}. A set object is a flat id
// array; a partition object is an array of classes. witness is null when
// resolving.
nlohmann::ordered_json to_json(const Certificate& cert);
// Throws ContractViolation on a malformed document.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

const char* to_string(Verdict verdict) noexcept;
const char* to_string(ObjectKind kind) noexcept;

}  // namespace resolvekit
