#include "ifsir/engine.hpp"

#include <sstream>

#include "ifsir/aggregation.hpp"
#include "ifsir/error.hpp"

namespace ifsir {

namespace {

[[noreturn]] void dimension_error(const std::string& what) {
  throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

void validate(const GroupDecisionProblem& problem) {
  const std::size_t n = problem.alternatives.size();
  const std::size_t m = problem.criteria.size();
  const std::size_t l = problem.experts.size();
  if (n < 2) {
    throw Error(ErrorKind::InvalidProblem,
                "at least two alternatives are required");
  }
  if (m < 1) {
    throw Error(ErrorKind::InvalidProblem, "at least one criterion is required");
  }
  if (l < 1) {
    throw Error(ErrorKind::InvalidProblem, "at least one expert is required");
  }
  if (problem.expert_importance.size() != l) {
    dimension_error("expected one importance value per expert");
  }
  if (problem.criterion_weights.rows() != l ||
      problem.criterion_weights.cols() != m) {
    dimension_error("criterion weights must be experts x criteria");
  }
  if (problem.assessments.size() != l) {
    dimension_error("expected one assessment matrix per expert");
  }
  for (std::size_t k = 0; k < l; ++k) {
    const auto& a = problem.assessments[k];
    if (a.rows() != n || a.cols() != m) {
      std::ostringstream msg;
      msg << "assessment matrix of expert '" << problem.experts[k] << "' is "
          << a.rows() << "x" << a.cols() << ", expected " << n << "x" << m;
      dimension_error(msg.str());
    }
  }
  if (problem.config.ideal == problem.config.anti_ideal) {
    throw Error(ErrorKind::InvalidProblem,
                "ideal and anti-ideal points must differ");
  }
  validate(problem.config.threshold);
}

std::vector<double> expert_degrees(const GroupDecisionProblem& problem) {
  const auto& cfg = problem.config;
  std::vector<double> xi;
  xi.reserve(problem.expert_importance.size());
  for (const auto& w : problem.expert_importance) {
    xi.push_back(closeness(cfg.expert_degree_metric, w, cfg.ideal,
                           cfg.anti_ideal));
  }
  return xi;
}

GroupMatrices integrate(const GroupDecisionProblem& problem,
                        std::vector<double> xi) {
  const std::size_t n = problem.alternatives.size();
  const std::size_t m = problem.criteria.size();
  const std::size_t l = problem.experts.size();
  if (xi.size() != l) dimension_error("expected one degree per expert");

  GroupMatrices out;
  out.d_bar = Matrix<Ifn>(n, m);
  std::vector<Ifn> opinions(l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < l; ++k) opinions[k] = problem.assessments[k](i, j);
      out.d_bar(i, j) = ifwa(opinions, xi);
    }
  }
  out.omega_bar.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto weights = problem.criterion_weights.column(j);
    out.omega_bar.push_back(
        problem.config.weight_aggregator == WeightAggregator::IFWA
            ? ifwa(weights, xi)
            : ifwg(weights, xi));
  }
  out.xi = std::move(xi);
  return out;
}

Matrix<double> performance_matrix(const GroupMatrices& group,
                                  const SolverConfig& config) {
  const auto& d = group.d_bar;
  Matrix<double> g(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      g(i, j) = closeness(config.performance_metric, d(i, j), config.ideal,
                          config.anti_ideal);
    }
  }
  return g;
}

IndexMatrices si_indices(const Matrix<double>& g, const ThresholdSpec& spec) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  IndexMatrices out{Matrix<double>(n, m, 0.0), Matrix<double>(n, m, 0.0)};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) {
        if (t == i) continue;
        out.superiority(i, j) += evaluate(spec, g(i, j) - g(t, j));
        out.inferiority(i, j) += evaluate(spec, g(t, j) - g(i, j));
      }
    }
  }
  return out;
}

FlowTable flows(const IndexMatrices& indices, std::span<const Ifn> omega_bar) {
  const std::size_t n = indices.superiority.rows();
  FlowTable table;
  table.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FlowRecord rec{
        ifwa(omega_bar, indices.superiority.row(i), ZeroWeights::Neutral),
        ifwa(omega_bar, indices.inferiority.row(i), ZeroWeights::Neutral)};
    rec.s_score = score(rec.s_flow);
    rec.i_score = score(rec.i_flow);
    table.push_back(rec);
  }
  return table;
}

}  // namespace ifsir
