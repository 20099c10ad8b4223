#include "ifsir/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "ifsir/error.hpp"

namespace ifsir {

namespace {

// `better(a, b)` is a strict weak order on alternatives; `same` its
// equivalence.
template <class Better, class Same>
Strata stratify(std::size_t n, Better better, Same same) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), better);
  Strata strata;
  for (std::size_t idx : order) {
    if (strata.empty() || !same(strata.back().front(), idx)) {
      strata.emplace_back();
    }
    strata.back().push_back(idx);
  }
  return strata;
}

// Position of each alternative's stratum; throws when the strata are not a
// partition of 0..n-1.
std::vector<std::size_t> stratum_positions(const Strata& strata,
                                           std::size_t n) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kUnset);
  std::size_t seen = 0;
  for (std::size_t s = 0; s < strata.size(); ++s) {
    for (std::size_t a : strata[s]) {
      if (a >= n || pos[a] != kUnset) {
        throw Error(ErrorKind::DimensionMismatch,
                    "rankings do not cover the same alternatives");
      }
      pos[a] = s;
      ++seen;
    }
  }
  if (seen != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "rankings do not cover the same alternatives");
  }
  return pos;
}

std::size_t count_alternatives(const Strata& strata) {
  std::size_t n = 0;
  for (const auto& s : strata) n += s.size();
  return n;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::PreferredOver: return "P";
    case Relation::PreferredBy: return "P-";
    case Relation::IndifferentTo: return "I";
    case Relation::IncomparableWith: return "R";
  }
  return "?";
}

Strata s_ranking(const FlowTable& flows) {
  return stratify(
      flows.size(),
      [&](std::size_t a, std::size_t b) {
        return xu_compare(flows[a].s_flow, flows[b].s_flow) == Ordering::Greater;
      },
      [&](std::size_t a, std::size_t b) {
        return xu_compare(flows[a].s_flow, flows[b].s_flow) == Ordering::Equal;
      });
}

Strata i_ranking(const FlowTable& flows) {
  return stratify(
      flows.size(),
      [&](std::size_t a, std::size_t b) {
        return xu_compare(flows[a].i_flow, flows[b].i_flow) == Ordering::Less;
      },
      [&](std::size_t a, std::size_t b) {
        return xu_compare(flows[a].i_flow, flows[b].i_flow) == Ordering::Equal;
      });
}

Matrix<Relation> combine(const Strata& s_order, const Strata& i_order) {
  const std::size_t n = count_alternatives(s_order);
  const auto s_pos = stratum_positions(s_order, n);
  const auto i_pos = stratum_positions(i_order, n);

  Matrix<Relation> rel(n, n, Relation::IndifferentTo);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      // Negative: a ranks better.
      const auto s_cmp = s_pos[a] <=> s_pos[b];
      const auto i_cmp = i_pos[a] <=> i_pos[b];
      const bool a_wins = (s_cmp < 0 && i_cmp <= 0) || (s_cmp == 0 && i_cmp < 0);
      const bool b_wins = (s_cmp > 0 && i_cmp >= 0) || (s_cmp == 0 && i_cmp > 0);
      if (a_wins) {
        rel(a, b) = Relation::PreferredOver;
      } else if (b_wins) {
        rel(a, b) = Relation::PreferredBy;
      } else if (s_cmp == 0 && i_cmp == 0) {
        rel(a, b) = Relation::IndifferentTo;
      } else {
        rel(a, b) = Relation::IncomparableWith;
      }
    }
  }
  return rel;
}

std::optional<Strata> complete_ranking(const Matrix<Relation>& relations) {
  const std::size_t n = relations.rows();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (relations(a, b) == Relation::IncomparableWith) return std::nullopt;
    }
  }
  // In a total preorder the number of alternatives each one beats fixes its
  // stratum; verify the candidate against every pair afterwards.
  std::vector<std::size_t> wins(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (relations(a, b) == Relation::PreferredOver) ++wins[a];
    }
  }
  Strata strata = stratify(
      n, [&](std::size_t a, std::size_t b) { return wins[a] > wins[b]; },
      [&](std::size_t a, std::size_t b) { return wins[a] == wins[b]; });

  std::vector<std::size_t> pos(n);
  for (std::size_t s = 0; s < strata.size(); ++s) {
    for (std::size_t a : strata[s]) pos[a] = s;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      Relation expected = Relation::IndifferentTo;
      if (pos[a] < pos[b]) expected = Relation::PreferredOver;
      if (pos[a] > pos[b]) expected = Relation::PreferredBy;
      if (relations(a, b) != expected) return std::nullopt;
    }
  }
  return strata;
}

RankingOutcome rank(const FlowTable& flows) {
  RankingOutcome out;
  out.s_order = s_ranking(flows);
  out.i_order = i_ranking(flows);
  out.relations = combine(out.s_order, out.i_order);
  out.complete = complete_ranking(out.relations);
  return out;
}

}  // namespace ifsir
