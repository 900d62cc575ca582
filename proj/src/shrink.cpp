#include "wsc/shrink.hpp"

#include <cmath>
#include <stdexcept>

namespace wsc {

double soft_threshold(double x, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  const double shrunk = std::abs(x) - lambda;
  if (shrunk <= 0.0) return 0.0;
  return x < 0.0 ? -shrunk : shrunk;
}

double hard_threshold(double x, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  return std::abs(x) > lambda ? x : 0.0;
}

double apply_threshold(const ThresholdRule& rule, double x) {
  return rule.kind == ThresholdKind::Soft ? soft_threshold(x, rule.lambda)
                                          : hard_threshold(x, rule.lambda);
}

double universal_threshold(double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0) {
    throw std::invalid_argument("universal threshold requires epsilon in (0, 1)");
  }
  return std::sqrt(2.0 * std::log(1.0 / (epsilon * epsilon)));
}

CoeffPyramid universal_estimate(const CoeffPyramid& observed, double epsilon) {
  const double lambda = universal_threshold(epsilon) * epsilon;
  // Level cutoff in dyadic units: levels above log2(1/eps^2) carry no
  // retained coefficients.
  const double level_cutoff = 2.0 * std::log2(1.0 / epsilon);
  CoeffPyramid estimate = observed;
  for (std::size_t i = 0; i < estimate.details.size(); ++i) {
    Eigen::VectorXd& level = estimate.details[i];
    if (static_cast<double>(estimate.detail_level(i)) <= level_cutoff) {
      for (Eigen::Index k = 0; k < level.size(); ++k) {
        level[k] = soft_threshold(level[k], lambda);
      }
    } else {
      level.setZero();
    }
  }
  return estimate;
}

Eigen::VectorXd pipeline_shrink(const CoeffPyramid& pyramid,
                                const PipelineShrinkConfig& cfg) {
  const Eigen::Index total = pyramid.total_coeffs();
  if (cfg.n_intact < 0 || cfg.n_intact > cfg.n_kept || cfg.n_kept > total) {
    throw std::invalid_argument(
        "pipeline shrink requires 0 <= n_intact <= n_kept <= coefficient count");
  }
  if (cfg.lambda < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  Eigen::VectorXd flat = pyramid.flatten();
  const ThresholdRule rule{cfg.kind, cfg.lambda};
  for (Eigen::Index i = cfg.n_intact; i < cfg.n_kept; ++i) {
    flat[i] = apply_threshold(rule, flat[i]);
  }
  flat.tail(total - cfg.n_kept).setZero();
  return flat;
}

}  // namespace wsc
