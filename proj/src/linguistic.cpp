#include "ifsir/linguistic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ifsir/error.hpp"

namespace ifsir {

namespace {

std::string normalize(std::string_view s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto first = std::find_if(s.begin(), s.end(), not_space);
  auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  std::string out;
  if (first < last) out.assign(first, last);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

LinguisticScale make_scale(std::string name,
                           std::initializer_list<ScaleEntry> entries) {
  return LinguisticScale(std::move(name), std::vector<ScaleEntry>(entries));
}

}  // namespace

LinguisticScale::LinguisticScale(std::string name,
                                 std::vector<ScaleEntry> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto term = normalize(entries_[i].term);
    const auto abbrev = normalize(entries_[i].abbrev);
    if (term.empty()) {
      throw Error(ErrorKind::ParseError,
                  "scale '" + name_ + "' has an entry with an empty term");
    }
    keys.emplace_back(term, i);
    if (!abbrev.empty() && abbrev != term) keys.emplace_back(abbrev, i);
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t k = 1; k < keys.size(); ++k) {
    if (keys[k].first == keys[k - 1].first) {
      throw Error(ErrorKind::DuplicateTerm,
                  "scale '" + name_ + "' binds '" + keys[k].first +
                      "' more than once");
    }
  }
}

std::optional<Ifn> LinguisticScale::find(std::string_view term) const {
  const auto key = normalize(term);
  for (const auto& e : entries_) {
    if (normalize(e.term) == key || normalize(e.abbrev) == key) return e.value;
  }
  return std::nullopt;
}

Ifn LinguisticScale::resolve(std::string_view term) const {
  if (auto v = find(term)) return *v;
  const auto key = normalize(term);
  std::string hint;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& e : entries_) {
    for (const auto& candidate : {e.abbrev, e.term}) {
      if (candidate.empty()) continue;
      const auto d = edit_distance(key, normalize(candidate));
      if (d < best) {
        best = d;
        hint = candidate;
      }
    }
  }
  std::string msg = "unknown term '" + std::string(term) + "' in scale '" +
                    name_ + "'";
  if (!hint.empty()) msg += " (did you mean '" + hint + "'?)";
  throw Error(ErrorKind::UnknownTerm, msg);
}

const std::vector<LinguisticScale>& builtin_scales() {
  static const std::vector<LinguisticScale> scales = [] {
    const auto v = [](double mu, double nu) { return Ifn::make(mu, nu); };
    std::vector<LinguisticScale> out;
    // Nine levels; the last two rows are kept as given even
    // though they break the monotone progression.
    out.push_back(make_scale("importance_t2",
                             {{"Extremely Important", "EI", v(1.00, 0.00)},
                              {"Great Important", "GI", v(0.90, 0.10)},
                              {"Very Important", "VI", v(0.80, 0.10)},
                              {"Important", "I", v(0.70, 0.20)},
                              {"Medium", "M", v(0.60, 0.30)},
                              {"Less Important", "LI", v(0.50, 0.40)},
                              {"Unimportant", "U", v(0.40, 0.50)},
                              {"Not Important", "NI", v(0.05, 0.80)},
                              {"Unconsidered", "UC", v(0.00, 0.10)}}));
    out.push_back(make_scale("quality_t2",
                             {{"Extremely Positive", "EP", v(1.00, 0.00)},
                              {"Absolutely Positive", "AP", v(0.90, 0.10)},
                              {"Very Very Positive", "VVP", v(0.80, 0.10)},
                              {"Very Positive", "VP", v(0.70, 0.20)},
                              {"Positive", "P", v(0.60, 0.30)},
                              {"Medium", "M", v(0.50, 0.40)},
                              {"Negative", "N", v(0.40, 0.50)},
                              {"Very Negative", "VN", v(0.05, 0.80)},
                              {"Extremely Negative", "EN", v(0.00, 0.10)}}));
    // Bindings under which the supply-chain worked example reproduces: GI
    // and M differ from importance_t2.
    out.push_back(make_scale("example_importance",
                             {{"Extremely Important", "EI", v(1.00, 0.00)},
                              {"Great Important", "GI", v(0.90, 0.05)},
                              {"Very Important", "VI", v(0.80, 0.10)},
                              {"Important", "I", v(0.70, 0.20)},
                              {"Medium", "M", v(0.50, 0.40)},
                              {"Less Important", "LI", v(0.50, 0.40)},
                              {"Unimportant", "U", v(0.40, 0.50)},
                              {"Not Important", "NI", v(0.05, 0.80)},
                              {"Unconsidered", "UC", v(0.00, 0.10)}}));
    LinguisticScale quality = out[1];
    out.emplace_back("example_quality", quality.entries());
    return out;
  }();
  return scales;
}

const LinguisticScale* find_builtin_scale(std::string_view name) {
  for (const auto& s : builtin_scales()) {
    if (s.name() == name) return &s;
  }
  return nullptr;
}

LinguisticScale load_scale(const nlohmann::json& document) {
  const auto fail = [](const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, path + ": " + what, path);
  };
  if (!document.is_object()) fail("", "scale document must be an object");
  if (!document.contains("name") || !document["name"].is_string()) {
    fail("/name", "missing string field 'name'");
  }
  if (!document.contains("entries") || !document["entries"].is_array()) {
    fail("/entries", "missing array field 'entries'");
  }
  std::vector<ScaleEntry> entries;
  const auto& items = document["entries"];
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string base = "/entries/" + std::to_string(i);
    const auto& item = items[i];
    if (!item.is_object()) fail(base, "entry must be an object");
    if (!item.contains("term") || !item["term"].is_string()) {
      fail(base + "/term", "missing string field 'term'");
    }
    std::string abbrev;
    if (item.contains("abbrev")) {
      if (!item["abbrev"].is_string()) fail(base + "/abbrev", "must be a string");
      abbrev = item["abbrev"].get<std::string>();
    }
    for (const char* field : {"mu", "nu"}) {
      if (!item.contains(field) || !item[field].is_number()) {
        fail(base + "/" + field, std::string("missing number field '") +
                                     field + "'");
      }
    }
    try {
      entries.push_back({item["term"].get<std::string>(), abbrev,
                         Ifn::make(item["mu"].get<double>(),
                                   item["nu"].get<double>())});
    } catch (const Error& e) {
      throw Error(e.kind(), base + ": " + e.what(), base);
    }
  }
  return LinguisticScale(document["name"].get<std::string>(),
                         std::move(entries));
}

LinguisticScale load_scale_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return load_scale(doc);
}

nlohmann::json emit_scale(const LinguisticScale& scale) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : scale.entries()) {
    entries.push_back({{"term", e.term},
                       {"abbrev", e.abbrev},
                       {"mu", e.value.mu()},
                       {"nu", e.value.nu()}});
  }
  return {{"name", scale.name()}, {"entries", entries}};
}

}  // namespace ifsir
