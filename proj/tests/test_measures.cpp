#include <doctest.h>

#include <cmath>

#include "ifsir/error.hpp"
#include "ifsir/measures.hpp"

using namespace ifsir;

namespace {
const Ifn kIdeal = Ifn::make(1.0, 0.0);
const Ifn kAnti = Ifn::make(0.0, 1.0);
}  // namespace

TEST_CASE("normalized Euclidean distance") {
  // sqrt(0.5 * (0.04 + 0.01 + 0.01)) = sqrt(0.03).
  CHECK(std::abs(distance(Metric::NormalizedEuclidean, Ifn::make(0.8, 0.1), kIdeal) -
                 0.173205080756888) < 1e-12);
  CHECK(distance(Metric::NormalizedEuclidean, kIdeal, kAnti) == doctest::Approx(1.0));
  const auto x = Ifn::make(0.3, 0.4);
  CHECK(distance(Metric::NormalizedEuclidean, x, x) == 0.0);
}

TEST_CASE("normalized Hamming distance") {
  // 0.5 * (0.0323 + 0.0090 + 0.0233).
  CHECK(std::abs(distance(Metric::NormalizedHamming, Ifn::make(0.9677, 0.0090), kIdeal) -
                 0.0323) < 1e-12);
  CHECK(distance(Metric::NormalizedHamming, kIdeal, kAnti) == doctest::Approx(1.0));
  const auto x = Ifn::make(0.3, 0.4);
  CHECK(distance(Metric::NormalizedHamming, x, x) == 0.0);
}

TEST_CASE("closeness to the ideal point") {
  CHECK(closeness(Metric::NormalizedEuclidean, kIdeal, kIdeal, kAnti) == 1.0);
  CHECK(closeness(Metric::NormalizedEuclidean, kAnti, kIdeal, kAnti) == 0.0);
  CHECK(std::abs(closeness(Metric::NormalizedEuclidean, Ifn::make(0.8, 0.1),
                           kIdeal, kAnti) -
                 0.8314) < 5e-5);
  CHECK(std::abs(closeness(Metric::NormalizedHamming, Ifn::make(0.7982, 0.1184),
                           kIdeal, kAnti) -
                 0.8137) < 5e-5);
  CHECK(closeness(Metric::NormalizedEuclidean, Ifn::make(0.5, 0.5), kIdeal,
                  kAnti) == doctest::Approx(0.5));
}

TEST_CASE("closeness rejects coincident reference points") {
  CHECK_THROWS_AS(closeness(Metric::NormalizedHamming, Ifn::make(0.4, 0.4),
                            kIdeal, kIdeal),
                  Error);
  try {
    closeness(Metric::NormalizedHamming, kAnti, kAnti, kAnti);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateReference);
  }
}

TEST_CASE("metric names") {
  CHECK(to_string(Metric::NormalizedEuclidean) == "euclidean");
  CHECK(to_string(Metric::NormalizedHamming) == "hamming");
}
