#include "clubplex/stats.hpp"

#include "clubplex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace clubplex {

double mean(std::span<const double> xs) {
  if (xs.empty())
    throw ContractError("mean of an empty series");
  double sum = 0.0;
  for (double x : xs)
    sum += x;
  return sum / static_cast<double>(xs.size());
}

double median(std::span<const double> xs) {
  if (xs.empty())
    throw ContractError("median of an empty series");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t mid = sorted.size() / 2;
  return sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw ContractError("pearson: series lengths differ");
  if (xs.size() < 2)
    throw ContractError("pearson: need at least two observations");

  // Two-pass: centered sums are exact zero for constant input.
  double mx = mean(xs), my = mean(ys);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double ExponentialFit::predict(double p) const { return beta * std::pow(alpha, p); }

ExponentialFit fit_exponential(std::span<const double> params, std::span<const double> runtimes) {
  if (params.size() != runtimes.size())
    throw ContractError("fit_exponential: series lengths differ");
  std::vector<double> logs;
  logs.reserve(runtimes.size());
  for (double t : runtimes) {
    if (!(t > 0.0))
      throw ContractError("fit_exponential: runtimes must be positive");
    logs.push_back(std::log(t));
  }
  if (params.empty() ||
      std::all_of(params.begin(), params.end(), [&](double p) { return p == params[0]; }))
    throw ContractError("fit_exponential: need at least two distinct parameter values");

  double mp = mean(params), ml = mean(logs);
  double spp = 0.0, spl = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    double dp = params[i] - mp;
    spp += dp * dp;
    spl += dp * (logs[i] - ml);
  }
  ExponentialFit fit;
  fit.slope = spl / spp;
  fit.intercept = ml - fit.slope * mp;
  fit.alpha = std::exp(fit.slope);
  fit.beta = std::exp(fit.intercept);
  return fit;
}

} // namespace clubplex
