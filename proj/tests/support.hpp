#pragma once

#include <random>
#include <string>

#include "ifsir/ifn.hpp"

namespace ifsir::testing {

inline const std::string kFixtureDir = IFSIR_FIXTURE_DIR;
inline const std::string kTestFixtureDir = IFSIR_TEST_FIXTURE_DIR;

inline std::string scm_fixture() { return kFixtureDir + "/scm_example.json"; }

/// Uniform over the valid triangle mu, nu >= 0, mu + nu <= 1, with a share
/// of boundary points (zero components, mu + nu = 1) mixed in.
inline Ifn random_ifn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 9);
  double mu = u(rng);
  double nu = u(rng);
  if (mu + nu > 1.0) {
    mu = 1.0 - mu;
    nu = 1.0 - nu;
  }
  switch (pick(rng)) {
    case 0: return Ifn::make(0.0, nu);
    case 1: return Ifn::make(mu, 0.0);
    case 2: return Ifn::make(mu, 1.0 - mu);
    case 3: return Ifn::make(1.0, 0.0);
    default: return Ifn::make(mu, nu);
  }
}

/// Strictly inside the triangle, so every power is well away from 0^x.
inline Ifn random_interior_ifn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.01, 0.98);
  double mu = u(rng);
  double nu = u(rng);
  if (const double sum = mu + nu; sum > 0.99) {
    mu *= 0.99 / sum;
    nu *= 0.99 / sum;
  }
  return Ifn::make(mu, nu);
}

inline double random_weight(std::mt19937_64& rng, double lo = 0.05,
                            double hi = 3.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace ifsir::testing
