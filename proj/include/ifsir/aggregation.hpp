#pragma once

#include <span>

#include "ifsir/ifn.hpp"

namespace ifsir {

/// What to do when every weight is zero. Public callers get Reject; the
/// flow computation needs Neutral, where the result is the empty sum (0, 1).
enum class ZeroWeights { Reject, Neutral };

/// Intuitionistic fuzzy weighted averaging:
///   (1 - prod (1 - mu_k)^w_k, prod nu_k^w_k)
/// Weights are used as given (no normalization); zero weights are neutral.
/// Throws EmptyInput, LengthMismatch or InvalidWeights (negative, non-finite,
/// or all zero under ZeroWeights::Reject).
Ifn ifwa(std::span<const Ifn> values, std::span<const double> weights,
         ZeroWeights zero = ZeroWeights::Reject);

/// Intuitionistic fuzzy weighted geometric:
///   (prod mu_k^w_k, 1 - prod (1 - nu_k)^w_k)
Ifn ifwg(std::span<const Ifn> values, std::span<const double> weights,
         ZeroWeights zero = ZeroWeights::Reject);

}  // namespace ifsir
