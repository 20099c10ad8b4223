#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ifsir/ifn.hpp"

namespace ifsir {

struct ScaleEntry {
  std::string term;
  std::string abbrev;
  Ifn value;

  friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
};

/// A closed mapping from linguistic terms to Ifn values. Full terms and
/// abbreviations are matched case-insensitively after trimming, and every
/// key must be unique within the scale.
class LinguisticScale {
 public:
  /// Throws DuplicateTerm when two entries share a key.
  LinguisticScale(std::string name, std::vector<ScaleEntry> entries);

  const std::string& name() const noexcept { return name_; }
  const std::vector<ScaleEntry>& entries() const noexcept { return entries_; }

  std::optional<Ifn> find(std::string_view term) const;
  /// Throws UnknownTerm, naming the scale and the closest known key.
  Ifn resolve(std::string_view term) const;

  friend bool operator==(const LinguisticScale&,
                         const LinguisticScale&) = default;

 private:
  std::string name_;
  std::vector<ScaleEntry> entries_;
};

/// importance_t2, quality_t2, example_importance, example_quality.
const std::vector<LinguisticScale>& builtin_scales();
/// nullptr when no builtin has that name.
const LinguisticScale* find_builtin_scale(std::string_view name);

/// Scale document: {"name": ..., "entries": [{"term", "abbrev", "mu", "nu"}]}.
/// Throws ParseError (with a JSON pointer path), DuplicateTerm, InvalidIfn.
LinguisticScale load_scale(const nlohmann::json& document);
LinguisticScale load_scale_text(std::string_view text);
nlohmann::json emit_scale(const LinguisticScale& scale);

}  // namespace ifsir
