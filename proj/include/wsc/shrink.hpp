#pragma once

#include <Eigen/Core>

#include "wsc/wavelet.hpp"

namespace wsc {

enum class ThresholdKind { Soft, Hard };

struct ThresholdRule {
  ThresholdKind kind = ThresholdKind::Soft;
  double lambda = 0.0;  // must be >= 0
};

// sign(x) * max(|x| - lambda, 0). Rejects negative lambda.
double soft_threshold(double x, double lambda);
// x * 1{|x| > lambda}. Kept as an ablation variant next to the soft rule.
double hard_threshold(double x, double lambda);
double apply_threshold(const ThresholdRule& rule, double x);

// lambda_eps = sqrt(2 log(1/eps^2)), the noise-calibrated threshold.
double universal_threshold(double epsilon);

// Soft-thresholds every detail coefficient at threshold lambda_eps * eps on
// levels j <= J and zeroes all detail levels above J, where J = log2(1/eps^2)
// is a resolution-level cutoff capped at the pyramid depth. Scaling
// coefficients pass through unchanged. Requires eps in (0, 1).
CoeffPyramid universal_estimate(const CoeffPyramid& observed, double epsilon);

// Keep / threshold / zero rule on the flattened coarse-to-fine coefficient
// vector: the first n_intact entries are copied verbatim, entries up to
// n_kept are thresholded at lambda, and everything beyond is zeroed. The
// output keeps the full coefficient count (structural zeros retained) so
// downstream consumers see a fixed dimension. Unlike universal_estimate,
// n_intact and n_kept index flattened coefficients, not resolution levels.
struct PipelineShrinkConfig {
  Eigen::Index n_intact = 0;  // T: coarsest coefficients passed through
  Eigen::Index n_kept = 0;    // J: coefficients retained at all; n_kept >= n_intact
  double lambda = 0.0;
  ThresholdKind kind = ThresholdKind::Soft;
};

Eigen::VectorXd pipeline_shrink(const CoeffPyramid& pyramid,
                                const PipelineShrinkConfig& cfg);

}  // namespace wsc
