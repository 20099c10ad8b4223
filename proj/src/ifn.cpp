#include "ifsir/ifn.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ifsir/error.hpp"

namespace ifsir {

namespace {

double clamp01(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

void require_positive(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "scalar must be positive and finite, got " << lambda;
    throw Error(ErrorKind::NonPositiveScalar, msg.str());
  }
}

}  // namespace

Ifn Ifn::make(double mu, double nu) {
  const bool finite = std::isfinite(mu) && std::isfinite(nu);
  if (!finite || mu < 0.0 || mu > 1.0 || nu < 0.0 || nu > 1.0 ||
      mu + nu > 1.0 + kValidityTolerance) {
    std::ostringstream msg;
    msg << "invalid intuitionistic fuzzy number (" << mu << ", " << nu
        << "): need 0 <= mu, nu <= 1 and mu + nu <= 1";
    throw Error(ErrorKind::InvalidIfn, msg.str());
  }
  return Ifn(mu, nu);
}

Ifn Ifn::trusted(double mu, double nu) noexcept {
  mu = clamp01(mu);
  nu = clamp01(nu);
  // Rounding can push the sum past 1 by a few ulps; give the excess back
  // from the larger component.
  if (mu + nu > 1.0 + kValidityTolerance) {
    if (mu >= nu) {
      mu = 1.0 - nu;
    } else {
      nu = 1.0 - mu;
    }
  }
  return Ifn(mu, nu);
}

double Ifn::pi() const noexcept { return std::max(0.0, 1.0 - mu_ - nu_); }

double safe_pow(double base, double exponent) noexcept {
  if (exponent == 0.0) return 1.0;
  if (base == 0.0) return 0.0;
  return std::pow(base, exponent);
}

Ifn complement(const Ifn& a) noexcept { return Ifn(a.nu_, a.mu_); }

// Product form keeps add((1,0), b) exactly (1,0); the expanded sum cancels.
Ifn add(const Ifn& a, const Ifn& b) noexcept {
  return Ifn::trusted(1.0 - (1.0 - a.mu_) * (1.0 - b.mu_), a.nu_ * b.nu_);
}

Ifn mul(const Ifn& a, const Ifn& b) noexcept {
  return Ifn::trusted(a.mu_ * b.mu_, 1.0 - (1.0 - a.nu_) * (1.0 - b.nu_));
}

Ifn scale(double lambda, const Ifn& a) {
  require_positive(lambda);
  return Ifn::trusted(1.0 - safe_pow(1.0 - a.mu_, lambda),
                      safe_pow(a.nu_, lambda));
}

Ifn power(const Ifn& a, double lambda) {
  require_positive(lambda);
  return Ifn::trusted(safe_pow(a.mu_, lambda),
                      1.0 - safe_pow(1.0 - a.nu_, lambda));
}

Ifn from_products(double one_minus_mu, double nu) noexcept {
  return Ifn::trusted(1.0 - one_minus_mu, nu);
}

double score(const Ifn& a) noexcept { return a.mu() - a.nu(); }

double accuracy(const Ifn& a) noexcept { return a.mu() + a.nu(); }

Ordering xu_compare(const Ifn& a, const Ifn& b) noexcept {
  const double sa = score(a);
  const double sb = score(b);
  if (sa < sb) return Ordering::Less;
  if (sa > sb) return Ordering::Greater;
  const double ha = accuracy(a);
  const double hb = accuracy(b);
  if (ha < hb) return Ordering::Less;
  if (ha > hb) return Ordering::Greater;
  return Ordering::Equal;
}

std::string format(const Ifn& a, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << '(' << a.mu() << ", "
     << a.nu() << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ifn& a) {
  return os << format(a);
}

}  // namespace ifsir
