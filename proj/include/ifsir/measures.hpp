#pragma once

#include <string_view>

#include "ifsir/ifn.hpp"

namespace ifsir {

// Both metrics work on the full (mu, nu, pi) triple and are normalized so
// that the distance between (1,0) and (0,1) is 1.
enum class Metric { NormalizedEuclidean, NormalizedHamming };

std::string_view to_string(Metric metric);

double distance(Metric metric, const Ifn& x, const Ifn& y) noexcept;

/// Relative closeness of x to `ideal`: D(x, anti) / (D(x, ideal) + D(x, anti)).
/// 1 at the ideal, 0 at the anti-ideal. Throws DegenerateReference when
/// ideal == anti.
double closeness(Metric metric, const Ifn& x, const Ifn& ideal,
                 const Ifn& anti);

}  // namespace ifsir
