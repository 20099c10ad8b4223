#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "ifsir/engine.hpp"

namespace ifsir {

/// Reads a problem document. Linguistic terms are resolved eagerly against
/// the document's `scales` bindings: `importance` for expert importance and
/// criterion weights, `quality` for assessments. A binding is a builtin
/// scale name, an inline scale document, or {"file": path} resolved against
/// `base_dir`. Any value may instead be an Ifn literal [mu, nu].
///
/// Errors carry a JSON pointer to the offending field: ParseError,
/// UnknownTerm, DimensionMismatch, InvalidIfn, InvalidThresholdParams,
/// InvalidProblem.
GroupDecisionProblem parse_problem(const nlohmann::json& doc,
                                   const std::filesystem::path& base_dir = {});
GroupDecisionProblem parse_problem_text(
    std::string_view text, const std::filesystem::path& base_dir = {});
GroupDecisionProblem load_problem(const std::filesystem::path& file);

/// Writes the resolved problem with every value as a full-precision Ifn
/// literal; parse_problem reads it back unchanged.
nlohmann::json emit_problem(const GroupDecisionProblem& problem);

nlohmann::json emit_ifn(const Ifn& a);
nlohmann::json emit_threshold(const ThresholdSpec& spec);

}  // namespace ifsir
