#pragma once

#include <string>

#include <json.hpp>

#include "ardlkit/ardl.hpp"

namespace ardlkit {

/// Versioned on-disk form of a fitted EC model. The document keeps the full
/// design and response so bounds tests and diagnostics can run from the file
/// alone, and a content hash over the numeric payload; loading rejects
/// tampered or truncated documents.
inline constexpr int kFitArtifactVersion = 1;

nlohmann::json ecm_fit_to_json(const ArdlEcmFit& fit);
ArdlEcmFit ecm_fit_from_json(const nlohmann::json& doc);

void save_fit(const ArdlEcmFit& fit, const std::string& path);
ArdlEcmFit load_fit(const std::string& path);

/// FNV-1a 64-bit hash of a canonically serialized JSON value, hex encoded.
std::string content_hash(const nlohmann::json& payload);

}  // namespace ardlkit
