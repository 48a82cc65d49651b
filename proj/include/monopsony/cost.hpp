#pragma once

#include <string>
#include <utility>
#include <vector>

namespace monopsony {

// Policy-production cost c(d): the utility cost of backing a policy at
// distance d in [0,1] from one's own platform. Admissible costs are strictly
// increasing with c(0) = 0, and every family carries a closed-form
// antiderivative so the surplus integrals downstream are exact.
class CostFunction {
 public:
  enum class Family { linear, power, exponential, piecewise_linear };

  static CostFunction linear();
  // c(d) = d^p, p > 0.
  static CostFunction power(double exponent);
  // c(d) = exp(k d) - 1, k > 0.
  static CostFunction exponential(double rate);
  // Two positive segments meeting at kink in (0,1); the second slope is
  // slope_ratio times the first, and the whole curve is scaled so c(1) = 1.
  static CostFunction piecewise_linear(double kink, double slope_ratio);

  Family family() const { return family_; }
  std::string family_name() const;
  const std::string& spec() const { return spec_; }
  std::vector<std::pair<std::string, double>> params() const;

  // c(d). Throws std::domain_error for d outside [0,1].
  double eval(double distance) const;

  // Exact integral of c over [lo,hi]; requires 0 <= lo <= hi <= 1.
  double integral(double lo, double hi) const;

  // Interior distances where c is not differentiable. Quadrature callers
  // split their integration intervals at the induced points.
  std::vector<double> kink_distances() const;

 private:
  CostFunction(Family family, double p1, double p2, std::string spec);

  double antiderivative(double x) const;

  Family family_;
  double p1_ = 0.0;  // exponent / rate / kink location
  double p2_ = 0.0;  // pwl slope ratio
  double s1_ = 0.0;  // pwl first slope (cached)
  double s2_ = 0.0;  // pwl second slope (cached)
  std::string spec_;
};

// Cost grammar: linear | power:<p> | exp:<k> | pwl:<kink>@<slope_ratio>.
CostFunction parse_cost(const std::string& spec);

// Families exercised by sweeps and the verification suite: linear, power
// p in {0.5, 1, 2, 3}, exponential k in {1, 3}, and one kinked cost.
const std::vector<std::string>& default_family_specs();

}  // namespace monopsony
