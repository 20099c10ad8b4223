#include <doctest.h>

#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "ifsir/dot.hpp"
#include "ifsir/problem_io.hpp"
#include "ifsir/report.hpp"
#include "support.hpp"

using namespace ifsir;

namespace {

struct Parsed {
  bool ok = false;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

Parsed parse_dot(const std::string& text) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS,
                                      boost::property<boost::vertex_name_t, std::string>,
                                      boost::property<boost::edge_name_t, std::string>>;
  Graph g;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", get(boost::vertex_name, g));
  dp.property("label", get(boost::edge_name, g));
  Parsed out;
  try {
    out.ok = boost::read_graphviz(text, g, dp);
  } catch (const std::exception&) {
    return out;
  }
  out.vertices = num_vertices(g);
  out.edges = num_edges(g);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

// A solution whose only interesting part is the relation matrix.
Solution with_relations(Matrix<Relation> rel) {
  Solution s;
  s.flows.assign(rel.rows(), FlowRecord{Ifn::make(0.5, 0.3), Ifn::make(0.2, 0.6),
                                        0.2, -0.4});
  s.ranking.relations = std::move(rel);
  return s;
}

}  // namespace

TEST_CASE("human report mirrors the worked example") {
  const auto p = load_problem(testing::scm_fixture());
  const auto text = emit_human_report(p, solve(p));
  CHECK(text.find("xi = (1.0000, 0.8314, 0.7405)") != std::string::npos);
  CHECK(text.find("(0.9677, 0.0090)") != std::string::npos);
  CHECK(text.find("omega_bar = ((0.9892, 0.0022), (0.9309, 0.0284), "
                  "(0.9560, 0.0133), (0.8900, 0.0532))") != std::string::npos);
  CHECK(text.find("S-ranking: {Y_3} -> {Y_1} -> {Y_4} -> {Y_2} -> {Y_5}") !=
        std::string::npos);
  CHECK(text.find("complete ranking: {Y_3} -> {Y_1} -> {Y_4} -> {Y_2} -> {Y_5}") !=
        std::string::npos);
}

TEST_CASE("machine report keeps full precision") {
  const auto p = load_problem(testing::scm_fixture());
  const auto sol = solve(p);
  const auto report = emit_machine_report(p, sol);
  CHECK(report["flows"][2]["alternative"] == "Y_3");
  CHECK(report["flows"][2]["i_flow"][0].get<double>() == 0.0);
  CHECK(report["flows"][2]["i_flow"][1].get<double>() == 1.0);
  CHECK(report["xi"][1].get<double>() == sol.group.xi[1]);
  CHECK(report["complete"].size() == 5);

  const auto reparsed = nlohmann::json::parse(report.dump());
  const auto again = parse_problem(reparsed["problem"]);
  CHECK(again == p);
  const auto sol2 = solve(again);
  CHECK(sol2.ranking.relations == sol.ranking.relations);
  CHECK(sol2.ranking.complete == sol.ranking.complete);
  CHECK(emit_machine_report(again, sol2) == report);
}

TEST_CASE("two alternatives still produce every section") {
  const auto p = load_problem(testing::kTestFixtureDir + "/two_alternatives.json");
  const auto sol = solve(p);
  const auto text = emit_human_report(p, sol);
  for (const char* section :
       {"xi =", "group decision matrix", "omega_bar =", "performance matrix",
        "superiority index", "inferiority index", "flows", "S-ranking:",
        "I-ranking:", "pairwise relations", "complete ranking:"}) {
    CAPTURE(section);
    CHECK(text.find(section) != std::string::npos);
  }
  const auto machine = emit_machine_report(p, sol);
  for (const char* key : {"xi", "d_bar", "omega_bar", "performance", "superiority",
                          "inferiority", "flows", "s_order", "i_order",
                          "relations", "complete"}) {
    CAPTURE(key);
    CHECK(machine.contains(key));
  }
}

TEST_CASE("decision map of the worked example is a reduced chain") {
  const auto p = load_problem(testing::scm_fixture());
  const auto dot = emit_dot(p.alternatives, solve(p));
  const auto parsed = parse_dot(dot);
  CHECK(parsed.ok);
  CHECK(parsed.vertices == 5);
  CHECK(parsed.edges == 4);
  CHECK(dot.find("\"Y_3\" -> \"Y_1\";") != std::string::npos);
  CHECK(dot.find("\"Y_1\" -> \"Y_4\";") != std::string::npos);
  CHECK(dot.find("\"Y_4\" -> \"Y_2\";") != std::string::npos);
  CHECK(dot.find("\"Y_2\" -> \"Y_5\";") != std::string::npos);
  CHECK(dot.find("s=-0.1140 i=-1.0000") != std::string::npos);
}

TEST_CASE("indifferent and incomparable pairs") {
  SUBCASE("all indifferent") {
    const auto sol = with_relations(Matrix<Relation>(3, 3, Relation::IndifferentTo));
    const auto dot = emit_dot({"a", "b", "c"}, sol);
    CHECK(count(dot, "style=dashed") == 3);
    CHECK(count(dot, "dir=none") == 3);
    CHECK(reduced_preference_edges(sol.ranking.relations).empty());
    CHECK(parse_dot(dot).ok);
  }
  SUBCASE("one incomparable pair") {
    const auto rel = combine(Strata{{0}, {1}, {2}}, Strata{{1}, {0}, {2}});
    const auto sol = with_relations(rel);
    const auto dot = emit_dot({"a", "b", "c"}, sol);
    CHECK(count(dot, "style=dotted, label=\"R\"") == 1);
    CHECK(count(dot, "style=dashed") == 0);
    // a and b both beat c; neither edge is implied by the other.
    CHECK(reduced_preference_edges(rel).size() == 2);
    CHECK(parse_dot(dot).ok);
  }
  SUBCASE("names needing quotes") {
    const auto sol = with_relations(
        combine(Strata{{0}, {1}}, Strata{{0}, {1}}));
    const auto dot = emit_dot({"Firm \"A\"", "B\\C"}, sol);
    const auto parsed = parse_dot(dot);
    CHECK(parsed.ok);
    CHECK(parsed.vertices == 2);
  }
}

TEST_CASE("strata formatting") {
  const std::vector<std::string> names = {"x", "y", "z"};
  CHECK(format_strata(Strata{{2}, {0, 1}}, names) == "{z} -> {x, y}");
  CHECK(format_strata(Strata{}, names).empty());
}
