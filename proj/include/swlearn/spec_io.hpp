#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "swlearn/oracle.hpp"
#include "swlearn/system.hpp"

namespace swlearn {

/// JSON layout of a ground-truth spec file:
///   {"N":3,"d":3,"m":3,"M":100,
///    "subsystems":[{"p":1,"coeffs":[[a_10..a_1m],...]},...],
///    "automaton":{"nodes":["v0",...],"initial":"v0",
///                 "edges":[{"src":"v0","dst":"v1","label":1},...]}}
/// Coefficient rows are listed per component, constants first.
SwitchedSystemSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const SwitchedSystemSpec& spec);

/// Loads and validates a spec file; ParseError diagnostics name the
/// offending field.
SwitchedSystemSpec load_spec(const std::filesystem::path& path);

/// Learned-coefficients report with the evaluator query count.
nlohmann::json models_report(const std::vector<PolynomialVectorField>& fields,
                             const OracleStats& stats);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace swlearn
