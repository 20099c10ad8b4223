#include "ifsir/measures.hpp"

#include <cmath>

#include "ifsir/error.hpp"

namespace ifsir {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::NormalizedEuclidean: return "euclidean";
    case Metric::NormalizedHamming: return "hamming";
  }
  return "unknown";
}

double distance(Metric metric, const Ifn& x, const Ifn& y) noexcept {
  const double dmu = x.mu() - y.mu();
  const double dnu = x.nu() - y.nu();
  const double dpi = x.pi() - y.pi();
  switch (metric) {
    case Metric::NormalizedEuclidean:
      return std::sqrt(0.5 * (dmu * dmu + dnu * dnu + dpi * dpi));
    case Metric::NormalizedHamming:
      return 0.5 * (std::abs(dmu) + std::abs(dnu) + std::abs(dpi));
  }
  return 0.0;
}

double closeness(Metric metric, const Ifn& x, const Ifn& ideal,
                 const Ifn& anti) {
  if (ideal == anti) {
    throw Error(ErrorKind::DegenerateReference,
                "ideal and anti-ideal reference points coincide: " +
                    format(ideal));
  }
  const double to_ideal = distance(metric, x, ideal);
  const double to_anti = distance(metric, x, anti);
  // The sum is bounded below by D(ideal, anti) > 0.
  return to_anti / (to_ideal + to_anti);
}

}  // namespace ifsir
