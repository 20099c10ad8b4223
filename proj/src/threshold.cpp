#include "ifsir/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifsir/error.hpp"

namespace ifsir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorKind::InvalidThresholdParams, what);
}

void require_non_negative(const char* kind, const char* name, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    std::ostringstream msg;
    msg << kind << " threshold: " << name << " must be >= 0, got " << x;
    reject(msg.str());
  }
}

void require_ordered(const char* kind, double q, double p) {
  require_non_negative(kind, "q", q);
  require_non_negative(kind, "p", p);
  if (!(p > q)) {
    std::ostringstream msg;
    msg << kind << " threshold: need p > q, got q = " << q << ", p = " << p;
    reject(msg.str());
  }
}

}  // namespace

void validate(const ThresholdSpec& spec) {
  std::visit(
      overloaded{
          [](const threshold::Step& s) {
            if (!(s.value > 0.0 && s.value <= 1.0)) {
              std::ostringstream msg;
              msg << "step threshold: value must lie in (0, 1], got "
                  << s.value;
              reject(msg.str());
            }
          },
          [](const threshold::Usual&) {},
          [](const threshold::UShape& s) {
            require_non_negative("u_shape", "q", s.q);
          },
          [](const threshold::VShape& s) {
            require_non_negative("v_shape", "p", s.p);
            if (!(s.p > 0.0)) reject("v_shape threshold: p must be > 0");
          },
          [](const threshold::Level& s) { require_ordered("level", s.q, s.p); },
          [](const threshold::LinearWithIndifference& s) {
            require_ordered("linear", s.q, s.p);
          },
          [](const threshold::Gaussian& s) {
            if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) {
              reject("gaussian threshold: sigma must be > 0");
            }
          },
      },
      spec);
}

double evaluate(const ThresholdSpec& spec, double d) noexcept {
  if (!(d > 0.0)) return 0.0;
  return std::visit(
      overloaded{
          [](const threshold::Step& s) { return s.value; },
          [](const threshold::Usual&) { return 1.0; },
          [d](const threshold::UShape& s) { return d > s.q ? 1.0 : 0.0; },
          [d](const threshold::VShape& s) { return std::min(d / s.p, 1.0); },
          [d](const threshold::Level& s) {
            if (d <= s.q) return 0.0;
            return d <= s.p ? 0.5 : 1.0;
          },
          [d](const threshold::LinearWithIndifference& s) {
            if (d <= s.q) return 0.0;
            if (d <= s.p) return (d - s.q) / (s.p - s.q);
            return 1.0;
          },
          [d](const threshold::Gaussian& s) {
            return 1.0 - std::exp(-(d * d) / (2.0 * s.sigma * s.sigma));
          },
      },
      spec);
}

std::string kind_name(const ThresholdSpec& spec) {
  return std::visit(
      overloaded{
          [](const threshold::Step&) { return std::string("step"); },
          [](const threshold::Usual&) { return std::string("usual"); },
          [](const threshold::UShape&) { return std::string("u_shape"); },
          [](const threshold::VShape&) { return std::string("v_shape"); },
          [](const threshold::Level&) { return std::string("level"); },
          [](const threshold::LinearWithIndifference&) {
            return std::string("linear");
          },
          [](const threshold::Gaussian&) { return std::string("gaussian"); },
      },
      spec);
}

}  // namespace ifsir
