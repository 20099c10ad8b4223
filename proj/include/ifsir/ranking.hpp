#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ifsir/engine.hpp"
#include "ifsir/matrix.hpp"

namespace ifsir {

/// Ordered groups of tied alternatives (indices), best first.
using Strata = std::vector<std::vector<std::size_t>>;

/// relations(i, k) describes alternative i against alternative k.
/// PreferredBy mirrors PreferredOver; the other two are symmetric.
enum class Relation { PreferredOver, PreferredBy, IndifferentTo, IncomparableWith };

std::string_view to_string(Relation r);

struct RankingOutcome {
  Strata s_order;
  Strata i_order;
  Matrix<Relation> relations;
  /// Present only when the relations form a total preorder.
  std::optional<Strata> complete;
};

/// Descending s_flow under xu_compare.
Strata s_ranking(const FlowTable& flows);
/// Ascending i_flow under xu_compare: the smaller inferiority flow is better.
Strata i_ranking(const FlowTable& flows);

/// Intersects two rankings of the same n alternatives. Throws
/// DimensionMismatch when they do not cover the same set.
Matrix<Relation> combine(const Strata& s_order, const Strata& i_order);

/// Linear strata when the relation matrix contains no incomparable pair and
/// its preference/indifference structure is a total preorder; nullopt
/// otherwise.
std::optional<Strata> complete_ranking(const Matrix<Relation>& relations);

RankingOutcome rank(const FlowTable& flows);

}  // namespace ifsir
