#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jk/kerov.hpp"

namespace jk::cli {

inline constexpr const char* kEngineVersion = "kerov-engine-1";

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailure = 2, kUsage = 64 };

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Coefficient text: the compact polynomial form when possible, else num / den.
std::string coef_text(const FieldElem& c);

nlohmann::ordered_json rpoly_json(const Partition& mu, const std::string& mode, const KPoly& k);
// Inverse of rpoly_json; throws std::invalid_argument.
KPoly rpoly_from_json(const nlohmann::ordered_json& j);

}  // namespace jk::cli
