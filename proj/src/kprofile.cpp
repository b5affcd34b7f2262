#include "infharm/kprofile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace infharm {
namespace {

// Half of ExampleA: 1 - (s^2+1)^-1 and its derivative, for s > 0.
std::pair<double, double> bump(double s) {
  const double d = s * s + 1.0;
  return {1.0 - 1.0 / d, 2.0 * s / (d * d)};
}

}  // namespace

KProfile::KProfile(Kind kind, double slope, std::vector<Knot> knots)
    : kind_(kind), slope_(slope), knots_(std::move(knots)) {
  switch (kind_) {
    case Kind::ExampleA:
      breakpoints_ = {0.0};
      break;
    case Kind::ExampleB:
      breakpoints_ = {-1.0, 1.0};
      break;
    case Kind::Tabulated:
      for (const Knot& k : knots_) breakpoints_.push_back(k.t);
      break;
    default:
      break;
  }
}

KProfile KProfile::zero() { return KProfile(Kind::Zero, 0.0, {}); }
KProfile KProfile::example_a() { return KProfile(Kind::ExampleA, 0.0, {}); }
KProfile KProfile::example_b() { return KProfile(Kind::ExampleB, 0.0, {}); }
KProfile KProfile::linear(double slope) { return KProfile(Kind::Linear, slope, {}); }

KProfile KProfile::tabulated(std::vector<Knot> knots) {
  if (knots.size() < 2)
    throw std::invalid_argument("KProfile::tabulated: need at least 2 knots");
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    if (!(knots[i].t < knots[i + 1].t))
      throw std::invalid_argument("KProfile::tabulated: knots must be strictly increasing in t");
  for (const Knot& k : knots)
    if (!std::isfinite(k.t) || !std::isfinite(k.k) || !std::isfinite(k.kprime))
      throw std::invalid_argument("KProfile::tabulated: non-finite knot");
  return KProfile(Kind::Tabulated, 0.0, std::move(knots));
}

KProfile KProfile::tabulated_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knots file: " + path);
  std::vector<Knot> knots;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    Knot k{};
    if (!(ss >> k.t >> k.k >> k.kprime)) {
      if (knots.empty()) continue;  // header line
      throw std::runtime_error("malformed knot row in " + path + ": " + line);
    }
    knots.push_back(k);
  }
  return tabulated(std::move(knots));
}

double KProfile::domain_min() const {
  return bounded_domain() ? knots_.front().t : -std::numeric_limits<double>::infinity();
}

double KProfile::domain_max() const {
  return bounded_domain() ? knots_.back().t : std::numeric_limits<double>::infinity();
}

std::pair<double, double> KProfile::eval(double t) const {
  switch (kind_) {
    case Kind::Zero:
      return {0.0, 0.0};
    case Kind::Linear:
      return {slope_ * t, slope_};
    case Kind::ExampleA:
      if (t <= 0.0) return {0.0, 0.0};
      return bump(t);
    case Kind::ExampleB: {
      if (t > 1.0) return bump(t - 1.0);
      if (t < -1.0) {
        const auto [k, kp] = bump(-(t + 1.0));
        return {-k, kp};
      }
      return {0.0, 0.0};
    }
    case Kind::Tabulated: {
      if (t < knots_.front().t || t > knots_.back().t)
        throw std::out_of_range("KProfile: parameter outside tabulated range");
      auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                                 [](double v, const Knot& k) { return v < k.t; });
      if (hi == knots_.end()) --hi;
      if (hi == knots_.begin()) ++hi;
      const Knot& k0 = *(hi - 1);
      const Knot& k1 = *hi;
      const double dt = k1.t - k0.t;
      const double s = (t - k0.t) / dt;
      const double s2 = s * s, s3 = s2 * s;
      const double h00 = 2 * s3 - 3 * s2 + 1;
      const double h10 = s3 - 2 * s2 + s;
      const double h01 = -2 * s3 + 3 * s2;
      const double h11 = s3 - s2;
      const double k = h00 * k0.k + h10 * dt * k0.kprime + h01 * k1.k + h11 * dt * k1.kprime;
      const double kp = (6 * s2 - 6 * s) * k0.k / dt + (3 * s2 - 4 * s + 1) * k0.kprime +
                        (-6 * s2 + 6 * s) * k1.k / dt + (3 * s2 - 2 * s) * k1.kprime;
      return {k, kp};
    }
  }
  throw std::logic_error("KProfile: unknown kind");
}

SupKReport sup_k_check(const KProfile& profile, double tmin, double tmax, int samples) {
  if (samples < 2) throw std::invalid_argument("sup_k_check: need at least 2 samples");
  SupKReport rep;
  rep.argmax = tmin;
  const double step = (tmax - tmin) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double t = tmin + i * step;
    const double k = std::abs(profile.eval(t).first);
    if (k > rep.max_abs_k) {
      rep.max_abs_k = k;
      rep.argmax = t;
    }
  }
  rep.below_pi_half = rep.max_abs_k < std::asin(1.0);  // pi/2
  return rep;
}

}  // namespace infharm
