#pragma once

#include "ifsir/engine.hpp"
#include "ifsir/ranking.hpp"

namespace ifsir {

/// Every intermediate result of one run, in pipeline order.
struct Solution {
  GroupMatrices group;
  Matrix<double> performance;
  IndexMatrices indices;
  FlowTable flows;
  RankingOutcome ranking;
};

/// Validates the problem, then runs the full pipeline.
Solution solve(const GroupDecisionProblem& problem);

}  // namespace ifsir
