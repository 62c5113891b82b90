#pragma once

#include "goeritz/handlebody.hpp"
#include "goeritz/reduction.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace goeritz {

using Json = nlohmann::ordered_json;

enum class Representation { Steps, Normal };
Representation parse_representation(const std::string& name);

inline constexpr const char* kCurveFormat = "goeritz-curve/1";
inline constexpr const char* kCertificateFormat = "goeritz-certificate/1";
inline constexpr const char* kConstraintFormat = "goeritz-constraints/1";

// Curves are written in canonical form so equal curves give equal files.
Json curve_to_json(const CurveWord& w, Representation rep = Representation::Steps);
// Validates the curve it reads; throws MalformedInput on a bad document.
CurveWord curve_from_json(const Json& doc);

Json certificate_to_json(const ReductionCertificate& cert);
// Generator string of a certificate document.
GoeritzWord certificate_word(const Json& doc);

Json constraint_report_to_json(const ConstraintReport& report);
Json signature_to_json(const CurveSignature& s);

// Throws Io on filesystem trouble and MalformedInput on bad syntax.
Json read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Json& doc);

} // namespace goeritz
