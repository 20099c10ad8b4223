#include "ifsir/dot.hpp"

#include <iomanip>
#include <sstream>

namespace ifsir {

namespace {

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quoted(const std::string& s) { return '"' + escaped(s) + '"'; }

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> reduced_preference_edges(
    const Matrix<Relation>& relations) {
  const std::size_t n = relations.rows();
  Matrix<unsigned char> reach(n, n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      reach(a, b) = relations(a, b) == Relation::PreferredOver;
    }
  }
  // Transitive closure; the preference relation is acyclic.
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!reach(a, via)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (reach(via, b)) reach(a, b) = 1;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (relations(a, b) != Relation::PreferredOver) continue;
      bool implied = false;
      for (std::size_t via = 0; via < n && !implied; ++via) {
        implied = via != a && via != b && reach(a, via) && reach(via, b);
      }
      if (!implied) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::string emit_dot(const std::vector<std::string>& alternatives,
                     const Solution& solution) {
  const auto& rel = solution.ranking.relations;
  const std::size_t n = alternatives.size();
  std::ostringstream os;
  os << "digraph decision_map {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = solution.flows[i];
    std::ostringstream label;
    label << std::fixed << std::setprecision(4) << '"' << escaped(alternatives[i])
          << "\\ns=" << f.s_score << " i=" << f.i_score << '"';
    os << "  " << quoted(alternatives[i]) << " [label=" << label.str() << "];\n";
  }
  for (const auto& [a, b] : reduced_preference_edges(rel)) {
    os << "  " << quoted(alternatives[a]) << " -> " << quoted(alternatives[b])
       << ";\n";
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const char* style = nullptr;
      const char* label = nullptr;
      if (rel(a, b) == Relation::IndifferentTo) {
        style = "dashed";
        label = "I";
      } else if (rel(a, b) == Relation::IncomparableWith) {
        style = "dotted";
        label = "R";
      } else {
        continue;
      }
      os << "  " << quoted(alternatives[a]) << " -> " << quoted(alternatives[b])
         << " [dir=none, style=" << style << ", label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ifsir
