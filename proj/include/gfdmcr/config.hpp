// Waveform/system parameter set shared by all modules.
#ifndef GFDMCR_CONFIG_HPP
#define GFDMCR_CONFIG_HPP

#include "gfdmcr/common.hpp"

namespace gfdmcr {

enum class FilterKind { RaisedCosine, Rectangular };

struct GfdmConfig {
    int subcarriers = 64;       // K
    int subsymbols = 5;         // M
    int cp_len = 10;            // samples of cyclic prefix per frame
    int qam_bits = 4;           // mu, bits per symbol of 2^mu-QAM
    double rolloff = 0.15;      // raised-cosine roll-off in [0,1]
    double subsymbol_duration = 33.3e-6;  // T_s, seconds
    FilterKind filter = FilterKind::RaisedCosine;

    int frame_len() const { return subcarriers * subsymbols; }
    double sample_rate() const { return subcarriers / subsymbol_duration; }

    // Unnormalized square-QAM alphabet {..,-3,-1,1,3,..} per rail.
    double avg_symbol_power() const {
        return 2.0 * (std::pow(2.0, qam_bits) - 1.0) / 3.0;
    }

    // Fraction of frame time carrying data rather than cyclic prefix.
    double rate_penalty() const {
        return static_cast<double>(frame_len()) / (frame_len() + cp_len);
    }

    void validate() const;

    // OFDM is the single-subsymbol rectangular special case, CP per symbol.
    static GfdmConfig ofdm_preset(int subcarriers = 64, int cp_len = 10);
};

}  // namespace gfdmcr

#endif
