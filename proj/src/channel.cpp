#include "gfdmcr/channel.hpp"

#include <random>

#include "gfdmcr/fft.hpp"

namespace gfdmcr {

Rvec exponential_pdp(int n_taps) {
    if (n_taps < 1) throw config_error("channel needs at least one tap");
    Rvec pdp(n_taps);
    if (n_taps == 1) {
        pdp[0] = 1.0;
        return pdp;
    }
    for (int i = 0; i < n_taps; ++i)
        pdp[i] = std::pow(10.0, -static_cast<double>(i) / (n_taps - 1));
    return pdp;
}

ChannelRealization draw_channel(const Rvec& pdp, int frame_len, std::uint64_t seed) {
    const int n_taps = static_cast<int>(pdp.size());
    if (n_taps < 1) throw config_error("empty power delay profile");
    if (frame_len < n_taps) throw config_error("frame shorter than channel");
    for (int i = 0; i < n_taps; ++i)
        if (pdp[i] <= 0.0) throw config_error("tap variances must be positive");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ChannelRealization ch;
    ch.pdp = pdp;
    ch.taps.resize(n_taps);
    for (int i = 0; i < n_taps; ++i) {
        const double sigma = std::sqrt(pdp[i] / 2.0);
        const double re = gauss(rng) * sigma;
        const double im = gauss(rng) * sigma;
        ch.taps[i] = cxd(re, im);
    }
    Cvec padded = Cvec::Zero(frame_len);
    padded.head(n_taps) = ch.taps;
    ch.freq_response = fft(padded, true);
    return ch;
}

ChannelRealization draw_channel_valid(const Rvec& pdp, int frame_len,
                                      std::uint64_t seed, int* rejections) {
    int discarded = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
        ChannelRealization ch =
            draw_channel(pdp, frame_len, derive_seed(seed, 0xc4a11, attempt));
        if (ch.min_gain() >= kDeepFadeFloor) {
            if (rejections) *rejections = discarded;
            return ch;
        }
        ++discarded;
    }
}

Cvec apply_channel(const Cvec& x_cp, int cp_len, const ChannelRealization& ch,
                   const NoiseSpec& noise, std::uint64_t seed) {
    const int n_taps = static_cast<int>(ch.taps.size());
    if (cp_len < n_taps - 1)
        throw domain_error("cyclic prefix shorter than channel memory");
    if (noise.n0 < 0.0) throw domain_error("negative noise density");

    const int n = static_cast<int>(x_cp.size());
    Cvec y = Cvec::Zero(n);
    for (int i = 0; i < n_taps; ++i) {
        const cxd h = ch.taps[i];
        for (int t = i; t < n; ++t) y[t] += h * x_cp[t - i];
    }
    if (noise.n0 > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, std::sqrt(noise.n0 / 2.0));
        for (int t = 0; t < n; ++t) y[t] += cxd(gauss(rng), gauss(rng));
    }
    return y;
}

Cvec fde_equalize(const Cvec& y, const ChannelRealization& ch) {
    const int n = static_cast<int>(y.size());
    if (ch.freq_response.size() != n)
        throw domain_error("channel response length mismatch");
    if (ch.min_gain() < kDeepFadeFloor)
        throw deep_fade_error("channel has a spectral null");

    Cvec spec = fft(y, true);
    spec.array() /= ch.freq_response.array();
    return ifft_normalized(spec);
}

}  // namespace gfdmcr
