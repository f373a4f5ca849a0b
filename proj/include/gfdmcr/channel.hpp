// Frequency-selective Rayleigh block fading, AWGN, and zero-forcing FDE.
#ifndef GFDMCR_CHANNEL_HPP
#define GFDMCR_CHANNEL_HPP

#include "gfdmcr/common.hpp"

namespace gfdmcr {

struct ChannelRealization {
    Cvec taps;           // time-domain impulse response
    Cvec freq_response;  // frame_len-point DFT of zero-padded taps
    Rvec pdp;            // per-tap variances used to draw the taps

    double min_gain() const { return freq_response.cwiseAbs().minCoeff(); }
};

struct NoiseSpec {
    double n0 = 1.0;  // complex noise variance per sample
};

// Exponentially decaying tap-variance profile 10^(-i/(n_taps-1)).
Rvec exponential_pdp(int n_taps);

// Independent circularly-symmetric complex Gaussian taps, variance pdp[i].
ChannelRealization draw_channel(const Rvec& pdp, int frame_len, std::uint64_t seed);

// Redraws (with derived seeds) until no frequency bin sits below the
// deep-fade floor; `rejections` counts discarded realizations.
ChannelRealization draw_channel_valid(const Rvec& pdp, int frame_len,
                                      std::uint64_t seed, int* rejections = nullptr);

constexpr double kDeepFadeFloor = 1e-12;

// Physical pass through the channel: linear convolution of the CP-extended
// frame plus white noise. After remove_cp the result equals circular
// convolution with the frame, which requires cp_len >= n_taps - 1.
Cvec apply_channel(const Cvec& x_cp, int cp_len, const ChannelRealization& ch,
                   const NoiseSpec& noise, std::uint64_t seed);

// u = IDFT(DFT(y) / H); exact inverse of the circular channel when noiseless.
Cvec fde_equalize(const Cvec& y, const ChannelRealization& ch);

}  // namespace gfdmcr

#endif
