// Closed-form receiver analytics: self-interference kernel, equivalent noise,
// SINR/SNR, symbol error rate, and spectral efficiency.
#ifndef GFDMCR_LINK_METRICS_HPP
#define GFDMCR_LINK_METRICS_HPP

#include "gfdmcr/channel.hpp"
#include "gfdmcr/modem.hpp"

namespace gfdmcr {

// f_{m',k'}(k): power leaking into detector slot (m',k') from a unit-power
// symbol stream on subcarrier k, scaled by the average symbol power. The
// k'=k term includes the wanted-signal power itself.
struct InterferenceKernel {
    int subsymbols = 0;
    int subcarriers = 0;
    double symbol_power = 0.0;
    std::vector<double> values;  // [m'][k'][k]

    double at(int m, int kp, int k) const {
        return values[(static_cast<size_t>(m) * subcarriers + kp) * subcarriers + k];
    }
    double& at(int m, int kp, int k) {
        return values[(static_cast<size_t>(m) * subcarriers + kp) * subcarriers + k];
    }
    // Total self-interference denominator for a uniform allocation.
    double row_sum(int m, int kp) const {
        double s = 0.0;
        for (int k = 0; k < subcarriers; ++k) s += at(m, kp, k);
        return s;
    }
};

struct LinkMetrics {
    ReceiverKind kind = ReceiverKind::MF;
    int qam_bits = 4;
    Rmat sinr;       // subsymbols x subcarriers
    Rmat noise_var;  // base equivalent-noise terms C_{m',k'}
};

// Kernel from transmit/receive prototype pulses (matched filtering uses the
// same pulse on both sides).
InterferenceKernel interference_kernel(const Rvec& tx_taps, const Rvec& rx_taps,
                                       int subcarriers, int subsymbols,
                                       double symbol_power);

// sigma^2_n at detector slot (m',k') for a given allocation.
double mf_interference_variance(const InterferenceKernel& kernel, const Rvec& alphas,
                                int m, int kp);

// Squared-magnitude spectra of all receiver rows; combined with a channel
// realization this yields every equivalent-noise base term with one weighted
// sum per row.
struct ReceiverNoiseProfile {
    int subcarriers = 0;
    int subsymbols = 0;
    Rmat row_power;  // frame_len rows (m'*K+k') x frame_len bins
};

ReceiverNoiseProfile make_noise_profile(const Cmat& receiver, int subcarriers);

// C_{m',k'} = (N0 / frame_len) * sum_p row_power(p) / |H[p]|^2.
// Callers divide by the subcarrier power to get the noise variance itself.
Rmat equivalent_noise_base(const ReceiverNoiseProfile& profile,
                           const ChannelRealization& ch, double n0);

LinkMetrics sinr_mf(const InterferenceKernel& kernel, const Rvec& alphas,
                    const Rmat& noise_base, const GfdmConfig& cfg);
LinkMetrics snr_zf(const Rvec& alphas, const Rmat& noise_base, const GfdmConfig& cfg);

// Square-QAM symbol error rate from the per-slot SINR grid.
double symbol_error_rate(const LinkMetrics& metrics);

// Per-symbol spectral efficiency, log2, averaged over the frame.
double sum_rate(const LinkMetrics& metrics);

}  // namespace gfdmcr

#endif
