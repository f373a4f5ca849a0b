// Block modulation matrix, modulator/demodulator, cyclic prefix, receivers.
#ifndef GFDMCR_MODEM_HPP
#define GFDMCR_MODEM_HPP

#include "gfdmcr/filter.hpp"

namespace gfdmcr {

enum class ReceiverKind { MF, ZF };

// Column (m,k) carries the m-th circular filter shift modulated to the k-th
// subcarrier. Columns are time-slot major: index = m*K + k, matching the
// symbol vector layout [s_0; s_1; ...; s_{M-1}].
struct ModulationMatrix {
    Cmat entries;  // frame_len x frame_len
    int subcarriers = 0;
    int subsymbols = 0;

    int col_index(int m, int k) const { return m * subcarriers + k; }
};

// Subcarrier base-band offset: the occupied band is centered at DC, so the
// k-th subcarrier sits at (k - (K-1)/2) subcarrier spacings.
inline double subcarrier_offset(int k, int subcarriers) {
    return k - (subcarriers - 1) / 2.0;
}

ModulationMatrix build_modulation_matrix(const GfdmConfig& cfg,
                                         const PrototypeFilter& filter);

// x = A * diag-per-subcarrier(sqrt(alpha)) * s
Cvec modulate(const Cvec& frame, const Rvec& alphas, const ModulationMatrix& A);

Cvec add_cp(const Cvec& x, int cp_len);
Cvec remove_cp(const Cvec& y, int cp_len);

// MF = A^H, ZF = A^{-1}. ZF refuses numerically singular matrices
// (reciprocal condition below 1e-12).
Cmat build_receiver_matrix(const ModulationMatrix& A, ReceiverKind kind);

// shat_{m,k} = (B u)_{m,k} / sqrt(alpha_k); every subcarrier must carry power.
Cvec demodulate(const Cvec& u, const Cmat& B, const Rvec& alphas, int subcarriers);

}  // namespace gfdmcr

#endif
