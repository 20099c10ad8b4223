#pragma once

#include <string>
#include <vector>

#include "ifsir/matrix.hpp"
#include "ifsir/ranking.hpp"
#include "ifsir/solve.hpp"

namespace ifsir {

/// Preference edges (i, k) of the relation matrix with every edge implied by
/// a longer path removed.
std::vector<std::pair<std::size_t, std::size_t>> reduced_preference_edges(
    const Matrix<Relation>& relations);

/// Decision map in Graphviz DOT: one arrow per reduced preference edge, a
/// dashed "I" edge per indifferent pair and a dotted "R" edge per
/// incomparable pair. Node labels carry the flow scores.
std::string emit_dot(const std::vector<std::string>& alternatives,
                     const Solution& solution);

}  // namespace ifsir
