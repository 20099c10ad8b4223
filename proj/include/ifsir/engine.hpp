#pragma once

#include <string>
#include <vector>

#include "ifsir/ifn.hpp"
#include "ifsir/matrix.hpp"
#include "ifsir/measures.hpp"
#include "ifsir/threshold.hpp"

namespace ifsir {

enum class WeightAggregator { IFWA, IFWG };

struct SolverConfig {
  // Aggregates the experts' criterion weights. The assessment matrix is
  // always combined with IFWA.
  WeightAggregator weight_aggregator = WeightAggregator::IFWA;
  ThresholdSpec threshold = threshold::Step{0.01};
  Ifn ideal = Ifn::make(1.0, 0.0);
  Ifn anti_ideal = Ifn::make(0.0, 1.0);
  Metric expert_degree_metric = Metric::NormalizedEuclidean;
  Metric performance_metric = Metric::NormalizedHamming;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// A group decision problem with every linguistic term already resolved.
/// Dimensions: n alternatives, m criteria, l experts.
struct GroupDecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<std::string> experts;
  std::vector<Ifn> expert_importance;     // l
  Matrix<Ifn> criterion_weights;          // l x m
  std::vector<Matrix<Ifn>> assessments;   // l matrices of n x m
  SolverConfig config;

  friend bool operator==(const GroupDecisionProblem&,
                         const GroupDecisionProblem&) = default;
};

/// Throws InvalidProblem (n < 2, m < 1, l < 1, ideal == anti-ideal),
/// DimensionMismatch or InvalidThresholdParams.
void validate(const GroupDecisionProblem& problem);

struct GroupMatrices {
  std::vector<double> xi;      // l expert degrees
  Matrix<Ifn> d_bar;           // n x m group assessments
  std::vector<Ifn> omega_bar;  // m group criterion weights
};

struct IndexMatrices {
  Matrix<double> superiority;  // n x m, S_j(Y_i)
  Matrix<double> inferiority;  // n x m, I_j(Y_i)
};

struct FlowRecord {
  Ifn s_flow;
  Ifn i_flow;
  double s_score = 0.0;
  double i_score = 0.0;
};

using FlowTable = std::vector<FlowRecord>;

/// Closeness of each expert's importance to the ideal point.
std::vector<double> expert_degrees(const GroupDecisionProblem& problem);

/// IFWA of the assessments and `weight_aggregator` of the criterion weights,
/// both weighted by the raw expert degrees.
GroupMatrices integrate(const GroupDecisionProblem& problem,
                        std::vector<double> xi);

/// g_ij: closeness of each group assessment to the ideal point.
Matrix<double> performance_matrix(const GroupMatrices& group,
                                  const SolverConfig& config);

/// S_j(Y_i) = sum over t != i of phi(g_ij - g_tj), I_j(Y_i) likewise with the
/// difference reversed.
IndexMatrices si_indices(const Matrix<double>& g, const ThresholdSpec& spec);

/// IFWA of the group criterion weights using each alternative's index row
/// as exponents. An all-zero row yields (0, 1).
FlowTable flows(const IndexMatrices& indices, std::span<const Ifn> omega_bar);

}  // namespace ifsir
