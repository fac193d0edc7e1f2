#pragma once

#include <optional>
#include <span>

namespace clubplex {

/// Sample Pearson correlation coefficient. std::nullopt when either series
/// has zero variance. Requires equal lengths of at least 2.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

/// Least-squares line ln t = p ln(alpha) + ln(beta), i.e. t ~ beta * alpha^p.
struct ExponentialFit {
  double alpha = 1.0;
  double beta = 1.0;
  double slope = 0.0;
  double intercept = 0.0;

  double predict(double p) const;
};

/// Throws ContractError on mismatched lengths, a nonpositive runtime, or
/// fewer than two distinct parameter values.
ExponentialFit fit_exponential(std::span<const double> params, std::span<const double> runtimes);

double mean(std::span<const double> xs);
double median(std::span<const double> xs);

} // namespace clubplex
