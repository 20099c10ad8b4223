#include "ifsir/problem_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "ifsir/error.hpp"
#include "ifsir/linguistic.hpp"

namespace ifsir {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorKind kind, const std::string& path,
                       const std::string& what) {
  throw Error(kind, (path.empty() ? std::string("/") : path) + ": " + what,
              path);
}

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(ErrorKind::ParseError, path, what);
}

std::string child(const std::string& path, std::string_view key) {
  // JSON pointer escaping.
  std::string out = path + "/";
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

const json& require(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) parse_fail(child(path, key), "missing required field");
  return obj[key];
}

void require_object(const json& v, const std::string& path) {
  if (!v.is_object()) parse_fail(path, "expected an object");
}

void require_array(const json& v, const std::string& path) {
  if (!v.is_array()) parse_fail(path, "expected an array");
}

std::string require_string(const json& v, const std::string& path) {
  if (!v.is_string()) parse_fail(path, "expected a string");
  return v.get<std::string>();
}

double require_number(const json& v, const std::string& path) {
  if (!v.is_number()) parse_fail(path, "expected a number");
  return v.get<double>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      parse_fail(child(path, key), "unknown field");
    }
  }
}

Ifn parse_ifn_literal(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    parse_fail(path, "expected an Ifn literal [mu, nu]");
  }
  try {
    return Ifn::make(v[0].get<double>(), v[1].get<double>());
  } catch (const Error& e) {
    fail(e.kind(), path, e.what());
  }
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open '" + file.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                origin + ": malformed JSON (" + e.what() + ")");
  }
}

class ProblemReader {
 public:
  ProblemReader(const json& doc, std::filesystem::path base_dir)
      : doc_(doc), base_dir_(std::move(base_dir)) {}

  GroupDecisionProblem read() {
    require_object(doc_, "");
    reject_unknown_keys(doc_, "",
                        {"name", "description", "scales", "experts",
                         "criteria", "alternatives", "assessments", "config"});
    read_scales();

    GroupDecisionProblem p;
    p.alternatives = read_alternatives();
    read_experts(p);
    read_criteria(p);
    read_assessments(p);
    if (doc_.contains("config")) p.config = read_config(doc_["config"], "/config");

    try {
      validate(p);
    } catch (const Error& e) {
      std::string path;
      if (e.kind() == ErrorKind::InvalidThresholdParams) path = "/config/threshold";
      else if (p.alternatives.size() < 2) path = "/alternatives";
      else if (p.criteria.empty()) path = "/criteria";
      else if (p.experts.empty()) path = "/experts";
      else if (p.config.ideal == p.config.anti_ideal) path = "/config";
      fail(e.kind(), path, e.what());
    }
    return p;
  }

 private:
  void read_scales() {
    if (!doc_.contains("scales")) return;
    const auto& scales = doc_["scales"];
    require_object(scales, "/scales");
    reject_unknown_keys(scales, "/scales", {"importance", "quality"});
    if (scales.contains("importance")) {
      importance_ = read_scale_ref(scales["importance"], "/scales/importance");
    }
    if (scales.contains("quality")) {
      quality_ = read_scale_ref(scales["quality"], "/scales/quality");
    }
  }

  LinguisticScale read_scale_ref(const json& ref, const std::string& path) {
    if (ref.is_string()) {
      const auto name = ref.get<std::string>();
      if (const auto* s = find_builtin_scale(name)) return *s;
      fail(ErrorKind::UnknownTerm, path, "no builtin scale named '" + name + "'");
    }
    require_object(ref, path);
    json scale_doc = ref;
    std::string doc_path = path;
    if (ref.contains("file")) {
      reject_unknown_keys(ref, path, {"file"});
      const auto file = base_dir_ / require_string(ref["file"], child(path, "file"));
      try {
        scale_doc = parse_json(read_file(file), file.string());
      } catch (const Error& e) {
        fail(e.kind(), child(path, "file"), e.what());
      }
    }
    try {
      return load_scale(scale_doc);
    } catch (const Error& e) {
      fail(e.kind(), doc_path + e.path(), e.what());
    }
  }

  Ifn read_value(const json& v, const std::string& path,
                 const std::optional<LinguisticScale>& scale,
                 const char* scale_role) {
    if (v.is_array()) return parse_ifn_literal(v, path);
    if (!v.is_string()) {
      parse_fail(path, "expected a linguistic term or an Ifn literal [mu, nu]");
    }
    if (!scale) {
      fail(ErrorKind::UnknownTerm, path,
           "term '" + v.get<std::string>() + "' used but no '" + scale_role +
               "' scale is bound under /scales");
    }
    try {
      return scale->resolve(v.get<std::string>());
    } catch (const Error& e) {
      fail(e.kind(), path, e.what());
    }
  }

  static std::vector<std::string> read_names(const json& arr,
                                             const std::string& path) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto name = require_string(arr[i], child(path, i));
      if (!seen.insert(name).second) {
        fail(ErrorKind::InvalidProblem, child(path, i),
             "duplicate name '" + name + "'");
      }
      names.push_back(std::move(name));
    }
    return names;
  }

  std::vector<std::string> read_alternatives() {
    const auto& arr = require(doc_, "", "alternatives");
    require_array(arr, "/alternatives");
    return read_names(arr, "/alternatives");
  }

  void read_experts(GroupDecisionProblem& p) {
    const auto& arr = require(doc_, "", "experts");
    require_array(arr, "/experts");
    json names = json::array();
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto path = child("/experts", k);
      require_object(arr[k], path);
      reject_unknown_keys(arr[k], path, {"name", "importance"});
      names.push_back(require(arr[k], path, "name"));
    }
    p.experts = read_names(names, "/experts");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto path = child("/experts", k);
      p.expert_importance.push_back(read_value(require(arr[k], path, "importance"),
                                               child(path, "importance"),
                                               importance_, "importance"));
    }
  }

  void read_criteria(GroupDecisionProblem& p) {
    const auto& arr = require(doc_, "", "criteria");
    require_array(arr, "/criteria");
    json names = json::array();
    for (std::size_t j = 0; j < arr.size(); ++j) {
      const auto path = child("/criteria", j);
      require_object(arr[j], path);
      reject_unknown_keys(arr[j], path, {"name", "weights"});
      names.push_back(require(arr[j], path, "name"));
    }
    p.criteria = read_names(names, "/criteria");
    p.criterion_weights = Matrix<Ifn>(p.experts.size(), p.criteria.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
      const auto path = child(child("/criteria", j), "weights");
      const auto& weights = require(arr[j], child("/criteria", j), "weights");
      require_object(weights, path);
      for (const auto& [expert, value] : weights.items()) {
        if (std::find(p.experts.begin(), p.experts.end(), expert) ==
            p.experts.end()) {
          parse_fail(child(path, expert), "unknown expert '" + expert + "'");
        }
      }
      for (std::size_t k = 0; k < p.experts.size(); ++k) {
        const auto& expert = p.experts[k];
        if (!weights.contains(expert)) {
          fail(ErrorKind::DimensionMismatch, child(path, expert),
               "missing weight from expert '" + expert + "'");
        }
        p.criterion_weights(k, j) = read_value(
            weights[expert], child(path, expert), importance_, "importance");
      }
    }
  }

  void read_assessments(GroupDecisionProblem& p) {
    const auto& obj = require(doc_, "", "assessments");
    require_object(obj, "/assessments");
    for (const auto& [expert, grid] : obj.items()) {
      if (std::find(p.experts.begin(), p.experts.end(), expert) ==
          p.experts.end()) {
        parse_fail(child("/assessments", expert),
                   "unknown expert '" + expert + "'");
      }
    }
    const std::size_t n = p.alternatives.size();
    const std::size_t m = p.criteria.size();
    for (const auto& expert : p.experts) {
      const auto path = child("/assessments", expert);
      if (!obj.contains(expert)) {
        fail(ErrorKind::DimensionMismatch, path,
             "missing assessment grid for expert '" + expert + "'");
      }
      const auto& grid = obj[expert];
      require_array(grid, path);
      if (grid.size() != n) {
        std::ostringstream msg;
        msg << "expected " << n << " rows (one per alternative), got "
            << grid.size();
        fail(ErrorKind::DimensionMismatch, path, msg.str());
      }
      Matrix<Ifn> mat(n, m);
      for (std::size_t i = 0; i < n; ++i) {
        const auto row_path = child(path, i);
        require_array(grid[i], row_path);
        if (grid[i].size() != m) {
          std::ostringstream msg;
          msg << "expected " << m << " cells (one per criterion), got "
              << grid[i].size();
          fail(ErrorKind::DimensionMismatch, row_path, msg.str());
        }
        for (std::size_t j = 0; j < m; ++j) {
          mat(i, j) = read_value(grid[i][j], child(row_path, j), quality_, "quality");
        }
      }
      p.assessments.push_back(std::move(mat));
    }
  }

  static Metric read_metric(const json& v, const std::string& path) {
    const auto name = lower(require_string(v, path));
    if (name == "euclidean" || name == "normalized_euclidean") {
      return Metric::NormalizedEuclidean;
    }
    if (name == "hamming" || name == "normalized_hamming") {
      return Metric::NormalizedHamming;
    }
    parse_fail(path, "unknown metric '" + name + "' (euclidean|hamming)");
  }

  static ThresholdSpec read_threshold(const json& v, const std::string& path) {
    require_object(v, path);
    const auto kind = lower(require_string(require(v, path, "kind"), child(path, "kind")));
    const auto num = [&](const char* key) {
      return require_number(require(v, path, key), child(path, key));
    };
    ThresholdSpec spec;
    if (kind == "step") {
      reject_unknown_keys(v, path, {"kind", "value"});
      spec = threshold::Step{num("value")};
    } else if (kind == "usual") {
      reject_unknown_keys(v, path, {"kind"});
      spec = threshold::Usual{};
    } else if (kind == "u_shape") {
      reject_unknown_keys(v, path, {"kind", "q"});
      spec = threshold::UShape{num("q")};
    } else if (kind == "v_shape") {
      reject_unknown_keys(v, path, {"kind", "p"});
      spec = threshold::VShape{num("p")};
    } else if (kind == "level") {
      reject_unknown_keys(v, path, {"kind", "q", "p"});
      spec = threshold::Level{num("q"), num("p")};
    } else if (kind == "linear") {
      reject_unknown_keys(v, path, {"kind", "q", "p"});
      spec = threshold::LinearWithIndifference{num("q"), num("p")};
    } else if (kind == "gaussian") {
      reject_unknown_keys(v, path, {"kind", "sigma"});
      spec = threshold::Gaussian{num("sigma")};
    } else {
      parse_fail(child(path, "kind"),
                 "unknown threshold kind '" + kind +
                     "' (step|usual|u_shape|v_shape|level|linear|gaussian)");
    }
    try {
      validate(spec);
    } catch (const Error& e) {
      fail(e.kind(), path, e.what());
    }
    return spec;
  }

  static SolverConfig read_config(const json& v, const std::string& path) {
    require_object(v, path);
    reject_unknown_keys(v, path,
                        {"weight_aggregator", "threshold", "expert_degree_metric",
                         "performance_metric", "ideal", "anti_ideal"});
    SolverConfig cfg;
    if (v.contains("weight_aggregator")) {
      const auto p = child(path, "weight_aggregator");
      const auto name = lower(require_string(v["weight_aggregator"], p));
      if (name == "ifwa") {
        cfg.weight_aggregator = WeightAggregator::IFWA;
      } else if (name == "ifwg") {
        cfg.weight_aggregator = WeightAggregator::IFWG;
      } else {
        parse_fail(p, "unknown aggregator '" + name + "' (IFWA|IFWG)");
      }
    }
    if (v.contains("threshold")) {
      cfg.threshold = read_threshold(v["threshold"], child(path, "threshold"));
    }
    if (v.contains("expert_degree_metric")) {
      cfg.expert_degree_metric = read_metric(
          v["expert_degree_metric"], child(path, "expert_degree_metric"));
    }
    if (v.contains("performance_metric")) {
      cfg.performance_metric = read_metric(v["performance_metric"],
                                           child(path, "performance_metric"));
    }
    if (v.contains("ideal")) {
      cfg.ideal = parse_ifn_literal(v["ideal"], child(path, "ideal"));
    }
    if (v.contains("anti_ideal")) {
      cfg.anti_ideal = parse_ifn_literal(v["anti_ideal"], child(path, "anti_ideal"));
    }
    return cfg;
  }

  const json& doc_;
  std::filesystem::path base_dir_;
  std::optional<LinguisticScale> importance_;
  std::optional<LinguisticScale> quality_;
};

}  // namespace

GroupDecisionProblem parse_problem(const nlohmann::json& doc,
                                   const std::filesystem::path& base_dir) {
  return ProblemReader(doc, base_dir).read();
}

GroupDecisionProblem parse_problem_text(std::string_view text,
                                        const std::filesystem::path& base_dir) {
  return parse_problem(parse_json(text, "problem"), base_dir);
}

GroupDecisionProblem load_problem(const std::filesystem::path& file) {
  return parse_problem(parse_json(read_file(file), file.string()),
                       file.parent_path());
}

nlohmann::json emit_ifn(const Ifn& a) { return json::array({a.mu(), a.nu()}); }

nlohmann::json emit_threshold(const ThresholdSpec& spec) {
  json out = {{"kind", kind_name(spec)}};
  if (const auto* s = std::get_if<threshold::Step>(&spec)) {
    out["value"] = s->value;
  } else if (const auto* s = std::get_if<threshold::UShape>(&spec)) {
    out["q"] = s->q;
  } else if (const auto* s = std::get_if<threshold::VShape>(&spec)) {
    out["p"] = s->p;
  } else if (const auto* s = std::get_if<threshold::Level>(&spec)) {
    out["q"] = s->q;
    out["p"] = s->p;
  } else if (const auto* s = std::get_if<threshold::LinearWithIndifference>(&spec)) {
    out["q"] = s->q;
    out["p"] = s->p;
  } else if (const auto* s = std::get_if<threshold::Gaussian>(&spec)) {
    out["sigma"] = s->sigma;
  }
  return out;
}

nlohmann::json emit_problem(const GroupDecisionProblem& p) {
  json experts = json::array();
  for (std::size_t k = 0; k < p.experts.size(); ++k) {
    experts.push_back({{"name", p.experts[k]},
                       {"importance", emit_ifn(p.expert_importance[k])}});
  }
  json criteria = json::array();
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    json weights = json::object();
    for (std::size_t k = 0; k < p.experts.size(); ++k) {
      weights[p.experts[k]] = emit_ifn(p.criterion_weights(k, j));
    }
    criteria.push_back({{"name", p.criteria[j]}, {"weights", weights}});
  }
  json assessments = json::object();
  for (std::size_t k = 0; k < p.experts.size(); ++k) {
    json grid = json::array();
    const auto& a = p.assessments[k];
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(emit_ifn(a(i, j)));
      grid.push_back(row);
    }
    assessments[p.experts[k]] = grid;
  }
  const auto& c = p.config;
  json config = {
      {"weight_aggregator",
       c.weight_aggregator == WeightAggregator::IFWA ? "IFWA" : "IFWG"},
      {"threshold", emit_threshold(c.threshold)},
      {"expert_degree_metric", to_string(c.expert_degree_metric)},
      {"performance_metric", to_string(c.performance_metric)},
      {"ideal", emit_ifn(c.ideal)},
      {"anti_ideal", emit_ifn(c.anti_ideal)},
  };
  return {{"alternatives", p.alternatives},
          {"experts", experts},
          {"criteria", criteria},
          {"assessments", assessments},
          {"config", config}};
}

}  // namespace ifsir
