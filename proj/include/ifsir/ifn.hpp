#pragma once

#include <iosfwd>
#include <string>

namespace ifsir {

/// Slack accepted on mu + nu <= 1, so that values printed at four decimals
/// can be fed back in.
inline constexpr double kValidityTolerance = 1e-9;

/// An intuitionistic fuzzy number: membership mu, non-membership nu and the
/// derived hesitation pi = 1 - mu - nu. Immutable once built.
class Ifn {
 public:
  /// The ideal point (1, 0).
  constexpr Ifn() noexcept = default;

  /// Validates and builds. Throws Error{InvalidIfn} when either component is
  /// outside [0,1], not finite, or mu + nu > 1 + kValidityTolerance.
  static Ifn make(double mu, double nu);

  constexpr double mu() const noexcept { return mu_; }
  constexpr double nu() const noexcept { return nu_; }
  /// Clamped at zero to absorb the validity slack.
  double pi() const noexcept;

  friend constexpr bool operator==(const Ifn&, const Ifn&) noexcept = default;

 private:
  constexpr Ifn(double mu, double nu) noexcept : mu_(mu), nu_(nu) {}
  static Ifn trusted(double mu, double nu) noexcept;

  double mu_ = 1.0;
  double nu_ = 0.0;

  friend Ifn complement(const Ifn&) noexcept;
  friend Ifn add(const Ifn&, const Ifn&) noexcept;
  friend Ifn mul(const Ifn&, const Ifn&) noexcept;
  friend Ifn scale(double, const Ifn&);
  friend Ifn power(const Ifn&, double);
  friend Ifn from_products(double, double) noexcept;
};

enum class Ordering { Less, Equal, Greater };

/// x^e with 0^e = 0 for e > 0 and x^0 = 1 (including 0^0).
double safe_pow(double base, double exponent) noexcept;

/// (nu, mu).
Ifn complement(const Ifn& a) noexcept;
/// (mu_a + mu_b - mu_a mu_b, nu_a nu_b).
Ifn add(const Ifn& a, const Ifn& b) noexcept;
/// (mu_a mu_b, nu_a + nu_b - nu_a nu_b).
Ifn mul(const Ifn& a, const Ifn& b) noexcept;
/// lambda * a = (1 - (1 - mu)^lambda, nu^lambda). Throws NonPositiveScalar.
Ifn scale(double lambda, const Ifn& a);
/// a^lambda = (mu^lambda, 1 - (1 - nu)^lambda). Throws NonPositiveScalar.
Ifn power(const Ifn& a, double lambda);

/// Builds (1 - keep_mu, keep_nu) from the two products the weighted
/// operators accumulate, clamping rounding drift back into the valid region.
Ifn from_products(double one_minus_mu, double nu) noexcept;

inline Ifn operator+(const Ifn& a, const Ifn& b) noexcept { return add(a, b); }
inline Ifn operator*(const Ifn& a, const Ifn& b) noexcept { return mul(a, b); }

/// s(a) = mu - nu.
double score(const Ifn& a) noexcept;
/// h(a) = mu + nu.
double accuracy(const Ifn& a) noexcept;

/// Score first, accuracy on a score tie, Equal when both tie.
Ordering xu_compare(const Ifn& a, const Ifn& b) noexcept;

/// "(mu, nu)" with `digits` decimals.
std::string format(const Ifn& a, int digits = 4);
std::ostream& operator<<(std::ostream& os, const Ifn& a);

}  // namespace ifsir
