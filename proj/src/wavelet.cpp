#include "wsc/wavelet.hpp"

#include <cmath>
#include <stdexcept>

namespace wsc {
namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

Eigen::VectorXd quadrature_mirror(const Eigen::VectorXd& lowpass) {
  const Eigen::Index n = lowpass.size();
  Eigen::VectorXd highpass(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    highpass[t] = (t % 2 == 0 ? 1.0 : -1.0) * lowpass[n - 1 - t];
  }
  return highpass;
}

void check_filters(const WaveletFamily& f) {
  constexpr double tol = 1e-12;
  const Eigen::Index n = f.lowpass.size();
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("wavelet filter tap count must be even");
  }
  if (std::abs(f.lowpass.sum() - std::sqrt(2.0)) > tol) {
    throw std::invalid_argument("lowpass taps must sum to sqrt(2)");
  }
  for (const auto* filt : {&f.lowpass, &f.highpass}) {
    if (std::abs(filt->squaredNorm() - 1.0) > tol) {
      throw std::invalid_argument("wavelet filter must have unit l2 norm");
    }
  }
  // Even-shift orthogonality within each filter and across the pair.
  for (Eigen::Index shift = 2; shift < n; shift += 2) {
    double hh = 0.0, gg = 0.0;
    for (Eigen::Index t = 0; t + shift < n; ++t) {
      hh += f.lowpass[t] * f.lowpass[t + shift];
      gg += f.highpass[t] * f.highpass[t + shift];
    }
    if (std::abs(hh) > tol || std::abs(gg) > tol) {
      throw std::invalid_argument("wavelet filter fails even-shift orthogonality");
    }
  }
  for (Eigen::Index shift = 0; shift < n; shift += 2) {
    double hg = 0.0, gh = 0.0;
    for (Eigen::Index t = 0; t + shift < n; ++t) {
      hg += f.lowpass[t + shift] * f.highpass[t];
      gh += f.highpass[t + shift] * f.lowpass[t];
    }
    if (std::abs(hg) > tol || std::abs(gh) > tol) {
      throw std::invalid_argument("lowpass/highpass pair fails orthogonality");
    }
  }
}

WaveletFamily make_family(WaveletKind kind, std::string name,
                          std::initializer_list<double> taps) {
  WaveletFamily f;
  f.kind = kind;
  f.name = std::move(name);
  f.lowpass = Eigen::Map<const Eigen::VectorXd>(taps.begin(),
                                                static_cast<Eigen::Index>(taps.size()));
  f.highpass = quadrature_mirror(f.lowpass);
  check_filters(f);
  return f;
}

const double kSqrt2Inv = 1.0 / std::sqrt(2.0);

// One periodized analysis step: input length n (even), outputs length n/2.
void analysis_step(const Eigen::VectorXd& in, const WaveletFamily& f,
                   Eigen::VectorXd& approx, Eigen::VectorXd& detail) {
  const Eigen::Index n = in.size();
  const Eigen::Index half = n / 2;
  const Eigen::Index taps = f.lowpass.size();
  approx.resize(half);
  detail.resize(half);
  for (Eigen::Index k = 0; k < half; ++k) {
    double a = 0.0, d = 0.0;
    for (Eigen::Index t = 0; t < taps; ++t) {
      const Eigen::Index idx = (2 * k + t) % n;
      a += f.lowpass[t] * in[idx];
      d += f.highpass[t] * in[idx];
    }
    approx[k] = a;
    detail[k] = d;
  }
}

// Transpose of analysis_step (the filters are orthonormal, so the inverse is
// the adjoint).
Eigen::VectorXd synthesis_step(const Eigen::VectorXd& approx,
                               const Eigen::VectorXd& detail,
                               const WaveletFamily& f) {
  const Eigen::Index half = approx.size();
  const Eigen::Index n = 2 * half;
  const Eigen::Index taps = f.lowpass.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < half; ++k) {
    for (Eigen::Index t = 0; t < taps; ++t) {
      const Eigen::Index idx = (2 * k + t) % n;
      out[idx] += f.lowpass[t] * approx[k] + f.highpass[t] * detail[k];
    }
  }
  return out;
}

}  // namespace

const WaveletFamily& wavelet_family(WaveletKind kind) {
  static const WaveletFamily haar =
      make_family(WaveletKind::Haar, "haar", {kSqrt2Inv, kSqrt2Inv});
  static const WaveletFamily daub4 = make_family(
      WaveletKind::Daub4, "daub4",
      {0.4829629131445341, 0.8365163037378079, 0.2241438680420134,
       -0.1294095225512604});
  static const WaveletFamily daub8 = make_family(
      WaveletKind::Daub8, "daub8",
      {0.2303778133088964, 0.7148465705529154, 0.6308807679298587,
       -0.0279837694168599, -0.1870348117190931, 0.0308413818355607,
       0.0328830116668852, -0.0105974017850690});
  switch (kind) {
    case WaveletKind::Haar:
      return haar;
    case WaveletKind::Daub4:
      return daub4;
    case WaveletKind::Daub8:
      return daub8;
  }
  throw std::invalid_argument("unknown wavelet kind");
}

std::optional<WaveletKind> parse_wavelet_name(std::string_view name) {
  if (name == "haar") return WaveletKind::Haar;
  if (name == "daub4" || name == "db4") return WaveletKind::Daub4;
  if (name == "daub8" || name == "db8") return WaveletKind::Daub8;
  return std::nullopt;
}

const std::vector<WaveletKind>& all_wavelet_kinds() {
  static const std::vector<WaveletKind> kinds = {
      WaveletKind::Haar, WaveletKind::Daub4, WaveletKind::Daub8};
  return kinds;
}

Eigen::VectorXd CoeffPyramid::flatten() const {
  Eigen::VectorXd flat(total_coeffs());
  Eigen::Index pos = 0;
  flat.head(scaling.size()) = scaling;
  pos += scaling.size();
  for (const auto& level : details) {
    flat.segment(pos, level.size()) = level;
    pos += level.size();
  }
  return flat;
}

CoeffPyramid CoeffPyramid::unflatten(const Eigen::VectorXd& flat, int coarse_level,
                                     Eigen::Index original_length) {
  if (coarse_level < 0 || !is_power_of_two(flat.size())) {
    throw std::invalid_argument("unflatten requires a dyadic coefficient count");
  }
  const int max_level = log2_exact(flat.size());
  if (coarse_level > max_level) {
    throw std::invalid_argument("coarse level exceeds coefficient count");
  }
  CoeffPyramid p;
  p.coarse_level = coarse_level;
  p.original_length = original_length == 0 ? flat.size() : original_length;
  Eigen::Index pos = 0;
  p.scaling = flat.head(Eigen::Index{1} << coarse_level);
  pos += p.scaling.size();
  for (int j = coarse_level; j < max_level; ++j) {
    const Eigen::Index len = Eigen::Index{1} << j;
    p.details.push_back(flat.segment(pos, len));
    pos += len;
  }
  return p;
}

CoeffPyramid CoeffPyramid::zeros(int coarse_level, int n_detail_levels,
                                 Eigen::Index original_length) {
  CoeffPyramid p;
  p.coarse_level = coarse_level;
  p.scaling = Eigen::VectorXd::Zero(Eigen::Index{1} << coarse_level);
  for (int i = 0; i < n_detail_levels; ++i) {
    p.details.push_back(Eigen::VectorXd::Zero(Eigen::Index{1} << (coarse_level + i)));
  }
  p.original_length = original_length == 0 ? p.total_coeffs() : original_length;
  return p;
}

void CoeffPyramid::check_well_formed() const {
  if (coarse_level < 0) throw std::invalid_argument("negative coarse level");
  if (scaling.size() != (Eigen::Index{1} << coarse_level)) {
    throw std::invalid_argument("scaling block size must be 2^coarse_level");
  }
  for (std::size_t i = 0; i < details.size(); ++i) {
    const Eigen::Index want = Eigen::Index{1} << detail_level(i);
    if (details[i].size() != want) {
      throw std::invalid_argument("detail level size inconsistent with dyadic structure");
    }
  }
  if (original_length < 1 || original_length > total_coeffs()) {
    throw std::invalid_argument("original_length out of range");
  }
}

PaddedSignal pad_to_dyadic(const Signal& signal) {
  if (signal.size() == 0) throw std::invalid_argument("cannot pad an empty signal");
  Eigen::Index n = 1;
  while (n < signal.size()) n *= 2;
  PaddedSignal out;
  out.original_length = signal.size();
  out.samples = Eigen::VectorXd::Zero(n);
  out.samples.head(signal.size()) = signal;
  return out;
}

CoeffPyramid dwt(const Signal& signal, const WaveletFamily& family,
                 int coarse_level) {
  if (!is_power_of_two(signal.size())) {
    throw std::invalid_argument("dwt requires a power-of-two signal length");
  }
  const int max_level = log2_exact(signal.size());
  if (coarse_level < 0 || coarse_level > max_level) {
    throw std::invalid_argument("coarse level exceeds log2(signal length)");
  }
  CoeffPyramid p;
  p.coarse_level = coarse_level;
  p.original_length = signal.size();
  p.details.resize(max_level - coarse_level);
  Eigen::VectorXd current = signal;
  for (int j = max_level - 1; j >= coarse_level; --j) {
    Eigen::VectorXd approx, detail;
    analysis_step(current, family, approx, detail);
    p.details[j - coarse_level] = std::move(detail);
    current = std::move(approx);
  }
  p.scaling = std::move(current);
  return p;
}

CoeffPyramid dwt(const PaddedSignal& signal, const WaveletFamily& family,
                 int coarse_level) {
  CoeffPyramid p = dwt(signal.samples, family, coarse_level);
  p.original_length = signal.original_length;
  return p;
}

Signal idwt(const CoeffPyramid& pyramid, const WaveletFamily& family) {
  pyramid.check_well_formed();
  Eigen::VectorXd current = pyramid.scaling;
  for (const auto& detail : pyramid.details) {
    if (detail.size() != current.size()) {
      throw std::invalid_argument("detail level size inconsistent with dyadic structure");
    }
    current = synthesis_step(current, detail, family);
  }
  if (pyramid.original_length < current.size()) {
    return current.head(pyramid.original_length);
  }
  return current;
}

}  // namespace wsc
