#include "ifsir/solve.hpp"

namespace ifsir {

Solution solve(const GroupDecisionProblem& problem) {
  validate(problem);
  Solution s;
  s.group = integrate(problem, expert_degrees(problem));
  s.performance = performance_matrix(s.group, problem.config);
  s.indices = si_indices(s.performance, problem.config.threshold);
  s.flows = flows(s.indices, s.group.omega_bar);
  s.ranking = rank(s.flows);
  return s;
}

}  // namespace ifsir
