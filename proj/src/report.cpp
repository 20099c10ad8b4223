#include "ifsir/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ifsir/problem_io.hpp"

namespace ifsir {

namespace {

using nlohmann::json;

std::string fixed4(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << x;
  return os.str();
}

std::size_t widest(const std::vector<std::string>& names) {
  std::size_t w = 0;
  for (const auto& n : names) w = std::max(w, n.size());
  return w;
}

template <class T, class Fmt>
void write_table(std::ostream& os, const std::string& title,
                 const Matrix<T>& mat, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, Fmt fmt) {
  os << title << '\n';
  std::vector<std::vector<std::string>> cells(mat.rows());
  std::size_t cell_w = widest(cols);
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      cells[i].push_back(fmt(mat(i, j)));
      cell_w = std::max(cell_w, cells[i].back().size());
    }
  }
  const std::size_t row_w = widest(rows);
  os << "  " << std::string(row_w, ' ');
  for (const auto& c : cols) os << "  " << std::setw(static_cast<int>(cell_w)) << c;
  os << '\n';
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    os << "  " << std::left << std::setw(static_cast<int>(row_w)) << rows[i]
       << std::right;
    for (const auto& cell : cells[i]) {
      os << "  " << std::setw(static_cast<int>(cell_w)) << cell;
    }
    os << '\n';
  }
  os << '\n';
}

json names_of(const Strata& strata, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& s : strata) {
    json group = json::array();
    for (std::size_t a : s) group.push_back(names[a]);
    out.push_back(group);
  }
  return out;
}

json emit_matrix(const Matrix<double>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  return out;
}

}  // namespace

std::string format_strata(const Strata& strata,
                          const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t s = 0; s < strata.size(); ++s) {
    if (s > 0) out += " -> ";
    out += '{';
    for (std::size_t k = 0; k < strata[s].size(); ++k) {
      if (k > 0) out += ", ";
      out += names[strata[s][k]];
    }
    out += '}';
  }
  return out;
}

std::string emit_human_report(const GroupDecisionProblem& problem,
                              const Solution& solution) {
  const auto& alts = problem.alternatives;
  const auto& crit = problem.criteria;
  const auto ifn4 = [](const Ifn& a) { return format(a, 4); };
  std::ostringstream os;

  os << "IF-SIR decision report\n";
  os << "  alternatives: " << alts.size() << ", criteria: " << crit.size()
     << ", experts: " << problem.experts.size() << "\n";
  os << "  threshold: " << kind_name(problem.config.threshold)
     << ", criterion weights aggregated by "
     << (problem.config.weight_aggregator == WeightAggregator::IFWA ? "IFWA"
                                                                    : "IFWG")
     << "\n\n";

  os << "xi = (";
  for (std::size_t k = 0; k < solution.group.xi.size(); ++k) {
    if (k > 0) os << ", ";
    os << fixed4(solution.group.xi[k]);
  }
  os << ")\n\n";

  write_table(os, "group decision matrix d_bar", solution.group.d_bar, alts,
              crit, ifn4);

  os << "omega_bar = (";
  for (std::size_t j = 0; j < solution.group.omega_bar.size(); ++j) {
    if (j > 0) os << ", ";
    os << ifn4(solution.group.omega_bar[j]);
  }
  os << ")\n\n";

  write_table(os, "performance matrix g", solution.performance, alts, crit,
              fixed4);
  write_table(os, "superiority index S", solution.indices.superiority, alts,
              crit, fixed4);
  write_table(os, "inferiority index I", solution.indices.inferiority, alts,
              crit, fixed4);

  Matrix<std::string> flow_cells(alts.size(), 4);
  for (std::size_t i = 0; i < alts.size(); ++i) {
    const auto& f = solution.flows[i];
    flow_cells(i, 0) = ifn4(f.s_flow);
    flow_cells(i, 1) = fixed4(f.s_score);
    flow_cells(i, 2) = ifn4(f.i_flow);
    flow_cells(i, 3) = fixed4(f.i_score);
  }
  write_table(os, "flows", flow_cells, alts,
              {"S-flow", "s(S-flow)", "I-flow", "s(I-flow)"},
              [](const std::string& s) { return s; });

  const auto& r = solution.ranking;
  os << "S-ranking: " << format_strata(r.s_order, alts) << '\n';
  os << "I-ranking: " << format_strata(r.i_order, alts) << "\n\n";

  Matrix<std::string> rel(alts.size(), alts.size());
  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (std::size_t k = 0; k < alts.size(); ++k) {
      rel(i, k) = i == k ? "-" : std::string(to_string(r.relations(i, k)));
    }
  }
  write_table(os, "pairwise relations (row vs column; P preferred, P- "
                  "dominated, I indifferent, R incomparable)",
              rel, alts, alts, [](const std::string& s) { return s; });

  if (r.complete) {
    os << "complete ranking: " << format_strata(*r.complete, alts) << '\n';
  } else {
    os << "complete ranking: none (incomparable pairs present; see the "
          "relations table)\n";
  }
  return os.str();
}

json emit_machine_report(const GroupDecisionProblem& problem,
                         const Solution& solution) {
  const auto& alts = problem.alternatives;
  json d_bar = json::array();
  for (std::size_t i = 0; i < solution.group.d_bar.rows(); ++i) {
    json row = json::array();
    for (const auto& v : solution.group.d_bar.row(i)) row.push_back(emit_ifn(v));
    d_bar.push_back(row);
  }
  json omega = json::array();
  for (const auto& w : solution.group.omega_bar) omega.push_back(emit_ifn(w));

  json flows = json::array();
  for (std::size_t i = 0; i < alts.size(); ++i) {
    const auto& f = solution.flows[i];
    flows.push_back({{"alternative", alts[i]},
                     {"s_flow", emit_ifn(f.s_flow)},
                     {"s_score", f.s_score},
                     {"i_flow", emit_ifn(f.i_flow)},
                     {"i_score", f.i_score}});
  }

  const auto& r = solution.ranking;
  json relations = json::array();
  for (std::size_t i = 0; i < alts.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < alts.size(); ++k) {
      row.push_back(std::string(to_string(r.relations(i, k))));
    }
    relations.push_back(row);
  }

  return {{"problem", emit_problem(problem)},
          {"xi", solution.group.xi},
          {"d_bar", d_bar},
          {"omega_bar", omega},
          {"performance", emit_matrix(solution.performance)},
          {"superiority", emit_matrix(solution.indices.superiority)},
          {"inferiority", emit_matrix(solution.indices.inferiority)},
          {"flows", flows},
          {"s_order", names_of(r.s_order, alts)},
          {"i_order", names_of(r.i_order, alts)},
          {"relations", relations},
          {"complete", r.complete ? names_of(*r.complete, alts) : json(nullptr)}};
}

std::string emit_report(const GroupDecisionProblem& problem,
                        const Solution& solution, ReportFormat format) {
  if (format == ReportFormat::Machine) {
    return emit_machine_report(problem, solution).dump(2) + "\n";
  }
  return emit_human_report(problem, solution);
}

}  // namespace ifsir
