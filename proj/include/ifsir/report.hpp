#pragma once

#include <string>

#include <json.hpp>

#include "ifsir/engine.hpp"
#include "ifsir/solve.hpp"

namespace ifsir {

enum class ReportFormat { Human, Machine };

/// Strata as "{Y_3} -> {Y_1, Y_4} -> ...".
std::string format_strata(const Strata& strata,
                          const std::vector<std::string>& names);

/// Plain-text tables, every number at four decimals.
std::string emit_human_report(const GroupDecisionProblem& problem,
                              const Solution& solution);

/// Full-precision JSON. Embeds the resolved problem under "problem", so the
/// report can be fed back to parse_problem.
nlohmann::json emit_machine_report(const GroupDecisionProblem& problem,
                                   const Solution& solution);

std::string emit_report(const GroupDecisionProblem& problem,
                        const Solution& solution, ReportFormat format);

}  // namespace ifsir
