#include "ifsir/aggregation.hpp"

#include <cmath>
#include <sstream>

#include "ifsir/error.hpp"

namespace ifsir {

namespace {

void check_inputs(std::span<const Ifn> values, std::span<const double> weights,
                  ZeroWeights zero) {
  if (values.empty()) {
    throw Error(ErrorKind::EmptyInput, "cannot aggregate an empty list");
  }
  if (values.size() != weights.size()) {
    std::ostringstream msg;
    msg << "got " << values.size() << " values but " << weights.size()
        << " weights";
    throw Error(ErrorKind::LengthMismatch, msg.str());
  }
  bool any_positive = false;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double w = weights[k];
    if (!std::isfinite(w) || w < 0.0) {
      std::ostringstream msg;
      msg << "weight " << k << " must be finite and non-negative, got " << w;
      throw Error(ErrorKind::InvalidWeights, msg.str());
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive && zero == ZeroWeights::Reject) {
    throw Error(ErrorKind::InvalidWeights, "all weights are zero");
  }
}

}  // namespace

Ifn ifwa(std::span<const Ifn> values, std::span<const double> weights,
         ZeroWeights zero) {
  check_inputs(values, weights, zero);
  double keep_mu = 1.0;
  double nu = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    keep_mu *= safe_pow(1.0 - values[k].mu(), weights[k]);
    nu *= safe_pow(values[k].nu(), weights[k]);
  }
  return from_products(keep_mu, nu);
}

Ifn ifwg(std::span<const Ifn> values, std::span<const double> weights,
         ZeroWeights zero) {
  check_inputs(values, weights, zero);
  double mu = 1.0;
  double keep_nu = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    mu *= safe_pow(values[k].mu(), weights[k]);
    keep_nu *= safe_pow(1.0 - values[k].nu(), weights[k]);
  }
  return complement(from_products(keep_nu, mu));
}

}  // namespace ifsir
