#include "gfdmcr/filter.hpp"

#include <cmath>

namespace gfdmcr {
namespace {

double sinc(double t) {
    if (std::abs(t) < 1e-12) return 1.0;
    return std::sin(M_PI * t) / (M_PI * t);
}

// Raised-cosine impulse response, t in symbol periods.
double raised_cosine(double t, double rolloff) {
    if (rolloff > 0.0) {
        const double sing = 1.0 / (2.0 * rolloff);
        if (std::abs(std::abs(t) - sing) < 1e-9)
            return (M_PI / 4.0) * sinc(sing);
    }
    const double denom = 1.0 - std::pow(2.0 * rolloff * t, 2);
    return sinc(t) * std::cos(M_PI * rolloff * t) / denom;
}

// Samples the pulse at `len` points with `sym_spacing` samples per symbol
// period, peak circularly shifted to index 0.
Rvec sample_pulse(const GfdmConfig& cfg, int len, int sym_spacing) {
    Rvec taps(len);
    if (cfg.filter == FilterKind::Rectangular) {
        // One-subsymbol support equals the whole frame only when M=1; for
        // M>1 the rectangular pulse spans the frame.
        taps.setConstant(1.0);
        return taps;
    }
    const int half = len / 2;
    for (int n = 0; n < len; ++n) {
        const double t = static_cast<double>(n - half) / sym_spacing;
        taps[(n + half) % len] = raised_cosine(t, cfg.rolloff);
    }
    return taps;
}

}  // namespace

PrototypeFilter build_prototype_filter(const GfdmConfig& cfg) {
    cfg.validate();
    const int len = cfg.frame_len();
    if (len < 2) throw config_error("frame length must be >= 2");
    Rvec taps = sample_pulse(cfg, len, cfg.subcarriers);
    taps /= taps.norm();
    return PrototypeFilter{std::move(taps)};
}

Rvec oversampled_prototype_taps(const GfdmConfig& cfg, int oversample) {
    cfg.validate();
    if (oversample < 1) throw config_error("oversample must be >= 1");
    const int len = cfg.frame_len() * oversample;
    Rvec taps = sample_pulse(cfg, len, cfg.subcarriers * oversample);
    taps *= std::sqrt(static_cast<double>(oversample)) / taps.norm();
    return taps;
}

}  // namespace gfdmcr
