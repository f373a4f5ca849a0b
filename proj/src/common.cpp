#include "gfdmcr/config.hpp"

namespace gfdmcr {

void GfdmConfig::validate() const {
    if (subcarriers < 2) throw config_error("subcarriers must be >= 2");
    if (subsymbols < 1) throw config_error("subsymbols must be >= 1");
    if (cp_len < 0) throw config_error("cp_len must be >= 0");
    if (qam_bits < 2 || qam_bits % 2 != 0)
        throw config_error("qam_bits must be a positive even integer (square QAM)");
    if (rolloff < 0.0 || rolloff > 1.0)
        throw config_error("rolloff must lie in [0, 1]");
    if (subsymbol_duration <= 0.0)
        throw config_error("subsymbol_duration must be positive");
}

GfdmConfig GfdmConfig::ofdm_preset(int subcarriers, int cp_len) {
    GfdmConfig cfg;
    cfg.subcarriers = subcarriers;
    cfg.subsymbols = 1;
    cfg.cp_len = cp_len;
    cfg.filter = FilterKind::Rectangular;
    return cfg;
}

}  // namespace gfdmcr
