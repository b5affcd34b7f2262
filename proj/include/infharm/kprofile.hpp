#pragma once

#include <string>
#include <utility>
#include <vector>

namespace infharm {

/// Turning-angle profile K for unit-speed curves f'(t) = (cos K(t), sin K(t)).
/// Each profile is C1 and evaluates to the pair (K(t), K'(t)).
///
/// Built-in families:
///   Zero      K = 0
///   ExampleA  K(t) = 1 - (t^2+1)^-1 for t > 0, K = 0 for t <= 0
///   ExampleB  K(t) = 1 - ((t-1)^2+1)^-1 for t > 1, K = 0 on [-1,1],
///             K(t) = ((t+1)^2+1)^-1 - 1 for t < -1
///   Linear    K(t) = slope * t
///   Tabulated cubic Hermite through (t, K, K') knots; C1 by construction,
///             refuses to extrapolate outside the knot range.
class KProfile {
 public:
  enum class Kind { Zero, ExampleA, ExampleB, Linear, Tabulated };

  struct Knot {
    double t;
    double k;
    double kprime;
  };

  static KProfile zero();
  static KProfile example_a();
  static KProfile example_b();
  static KProfile linear(double slope);
  static KProfile tabulated(std::vector<Knot> knots);
  /// Knot CSV with rows t,K,Kprime (optional header line).
  static KProfile tabulated_from_csv(const std::string& path);

  Kind kind() const { return kind_; }
  double slope() const { return slope_; }

  /// (K(t), K'(t)).
  std::pair<double, double> eval(double t) const;

  /// Parameters where the defining formula changes piece (knot locations for
  /// tabulated profiles). Quadrature panels are split here.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// Parameter range on which the profile may be evaluated; unbounded for
  /// the analytic families.
  bool bounded_domain() const { return kind_ == Kind::Tabulated; }
  double domain_min() const;
  double domain_max() const;

 private:
  KProfile(Kind kind, double slope, std::vector<Knot> knots);

  Kind kind_;
  double slope_ = 0.0;
  std::vector<Knot> knots_;
  std::vector<double> breakpoints_;
};

/// Sampled bound check for the hypothesis sup|K| < pi/2 required by the
/// solution families; `samples` uniform parameters on [tmin, tmax]
/// including both endpoints.
struct SupKReport {
  double max_abs_k = 0.0;
  double argmax = 0.0;
  bool below_pi_half = true;
};

SupKReport sup_k_check(const KProfile& profile, double tmin, double tmax,
                       int samples);

}  // namespace infharm
