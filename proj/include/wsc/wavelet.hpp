#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace wsc {

using Signal = Eigen::VectorXd;

enum class WaveletKind { Haar, Daub4, Daub8 };

// Orthonormal conjugate-quadrature filter pair. The highpass is the
// quadrature mirror of the lowpass: g[t] = (-1)^t h[n-1-t].
struct WaveletFamily {
  WaveletKind kind;
  std::string name;
  Eigen::VectorXd lowpass;
  Eigen::VectorXd highpass;
};

// Filter banks with standard published taps. Construction asserts the filter
// invariants: even tap count, sum(h) = sqrt(2), unit l2 norm, vanishing
// even-shift inner products (all within 1e-12).
const WaveletFamily& wavelet_family(WaveletKind kind);
std::optional<WaveletKind> parse_wavelet_name(std::string_view name);
const std::vector<WaveletKind>& all_wavelet_kinds();

// Multilevel periodized wavelet decomposition of a dyadic-length signal.
// scaling holds the 2^L coefficients at the coarse level L; details[i] holds
// the 2^(L+i) detail coefficients at level L+i, for L+i up to max_level()-1.
// original_length remembers the pre-padding sample count so reconstruction
// can truncate back (equal to total_coeffs() for genuinely dyadic inputs).
struct CoeffPyramid {
  int coarse_level = 0;
  Eigen::VectorXd scaling;
  std::vector<Eigen::VectorXd> details;
  Eigen::Index original_length = 0;

  int max_level() const { return coarse_level + static_cast<int>(details.size()); }
  Eigen::Index total_coeffs() const { return Eigen::Index{1} << max_level(); }
  int detail_level(std::size_t i) const { return coarse_level + static_cast<int>(i); }

  // Coarse-to-fine flattening: [scaling, details L, L+1, ...].
  Eigen::VectorXd flatten() const;
  static CoeffPyramid unflatten(const Eigen::VectorXd& flat, int coarse_level,
                                Eigen::Index original_length);

  static CoeffPyramid zeros(int coarse_level, int n_detail_levels,
                            Eigen::Index original_length = 0);
  void check_well_formed() const;  // throws std::invalid_argument on violation
};

struct PaddedSignal {
  Signal samples;
  Eigen::Index original_length = 0;
};

// Zero-pads on the right to the next power of two. Rejects empty input.
PaddedSignal pad_to_dyadic(const Signal& signal);

// Periodized orthonormal analysis down to scaling level coarse_level.
// Rejects non-dyadic lengths and coarse levels above log2(length).
CoeffPyramid dwt(const Signal& signal, const WaveletFamily& family,
                 int coarse_level = 0);
CoeffPyramid dwt(const PaddedSignal& signal, const WaveletFamily& family,
                 int coarse_level = 0);

// Inverse transform; truncates to original_length when the pyramid was built
// from a padded signal.
Signal idwt(const CoeffPyramid& pyramid, const WaveletFamily& family);

}  // namespace wsc
