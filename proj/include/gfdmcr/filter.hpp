// Prototype transmit pulse construction.
#ifndef GFDMCR_FILTER_HPP
#define GFDMCR_FILTER_HPP

#include "gfdmcr/config.hpp"

namespace gfdmcr {

struct PrototypeFilter {
    Rvec taps;  // frame_len() real samples, unit energy

    double energy() const { return taps.squaredNorm(); }
};

// Raised-cosine impulse response sampled across the frame (symbol spacing =
// subcarrier count in samples), circularly centered so the peak sits at n=0,
// scaled to unit energy. Rectangular: constant over the frame.
PrototypeFilter build_prototype_filter(const GfdmConfig& cfg);

// Same continuous pulse sampled `oversample` times finer, for spectral work
// beyond the critical Nyquist span. Energy is normalized to `oversample` so
// the underlying continuous waveform matches the critically sampled one.
Rvec oversampled_prototype_taps(const GfdmConfig& cfg, int oversample);

// Value of the circularly shifted pulse g[(n - shift) mod len].
inline double shifted_tap(const Rvec& taps, int n, int shift) {
    const int len = static_cast<int>(taps.size());
    int idx = (n - shift) % len;
    if (idx < 0) idx += len;
    return taps[idx];
}

}  // namespace gfdmcr

#endif
