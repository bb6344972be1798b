#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "primaltop/theorems.hpp"

namespace primaltop {

/// A space as written in an input document: a universe, the candidate open
/// sets and the candidate primal members, still unvalidated. `to_space()`
/// runs both validations.
struct SpaceDocument {
  std::string name;  // optional label, empty when absent
  UniversePtr universe;
  SetFamily topology_family;
  SetFamily primal_family;

  PrimalSpace to_space() const;
};

/// Parses the JSON document format:
///
///   {
///     "name": "EX-A",
///     "universe": ["a", "b", "c"],
///     "topology": [[], ["b"], ["a", "b", "c"]],
///     "primal": [[], ["b"]]
///   }
///
/// Subsets are arrays of point names. Malformed text, missing keys, unknown
/// points and ill-formed universes all raise ParseError.
SpaceDocument parse_space_document(const std::string& text);
SpaceDocument load_space_document(const std::filesystem::path& path);
std::string serialize_space_document(const SpaceDocument& doc);

inline constexpr int kReportSchemaVersion = 1;

/// A machine-readable report with a derived human rendering. The machine
/// body is canonical JSON: emitting the parse of an emitted report
/// reproduces it byte for byte. Timing never enters the body.
class Report {
 public:
  explicit Report(nlohmann::json body);
  static Report parse(const std::string& text);

  const nlohmann::json& body() const noexcept { return body_; }
  std::string machine() const;
  /// Plain-text table derived from the machine body only.
  std::string table() const;

 private:
  nlohmann::json body_;
};

// JSON building blocks shared by the CLI and the bindings.
nlohmann::json subset_to_json(const Subset& s);
nlohmann::json family_to_json(const SetFamily& f);
nlohmann::json witness_to_json(const SpaceWitness& w);
nlohmann::json check_report_to_json(const CheckReport& r);

}  // namespace primaltop
