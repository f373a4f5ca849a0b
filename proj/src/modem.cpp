#include "gfdmcr/modem.hpp"

#include <Eigen/LU>

namespace gfdmcr {

ModulationMatrix build_modulation_matrix(const GfdmConfig& cfg,
                                         const PrototypeFilter& filter) {
    const int K = cfg.subcarriers;
    const int M = cfg.subsymbols;
    const int N = cfg.frame_len();
    if (filter.taps.size() != N)
        throw domain_error("filter length must equal frame length");

    ModulationMatrix A;
    A.subcarriers = K;
    A.subsymbols = M;
    A.entries.resize(N, N);
    for (int m = 0; m < M; ++m) {
        for (int k = 0; k < K; ++k) {
            const int col = m * K + k;
            const double fk = subcarrier_offset(k, K) / K;
            for (int n = 0; n < N; ++n) {
                const double phase = 2.0 * M_PI * fk * n;
                A.entries(n, col) =
                    shifted_tap(filter.taps, n, m * K) * cxd(std::cos(phase), std::sin(phase));
            }
        }
    }
    return A;
}

Cvec modulate(const Cvec& frame, const Rvec& alphas, const ModulationMatrix& A) {
    const int K = A.subcarriers;
    const int N = static_cast<int>(A.entries.rows());
    if (frame.size() != N) throw domain_error("frame length mismatch");
    if (alphas.size() != K) throw domain_error("allocation length mismatch");
    for (int k = 0; k < K; ++k)
        if (alphas[k] < 0.0) throw domain_error("negative subcarrier power");

    Cvec scaled(N);
    for (int m = 0; m < A.subsymbols; ++m)
        for (int k = 0; k < K; ++k)
            scaled[m * K + k] = std::sqrt(alphas[k]) * frame[m * K + k];
    return A.entries * scaled;
}

Cvec add_cp(const Cvec& x, int cp_len) {
    const int n = static_cast<int>(x.size());
    if (cp_len < 0 || cp_len > n) throw domain_error("cp length out of range");
    Cvec out(n + cp_len);
    out.head(cp_len) = x.tail(cp_len);
    out.tail(n) = x;
    return out;
}

Cvec remove_cp(const Cvec& y, int cp_len) {
    const int n = static_cast<int>(y.size());
    if (cp_len < 0 || cp_len > n) throw domain_error("cp length out of range");
    return y.tail(n - cp_len);
}

Cmat build_receiver_matrix(const ModulationMatrix& A, ReceiverKind kind) {
    if (kind == ReceiverKind::MF) return A.entries.adjoint();
    Eigen::PartialPivLU<Cmat> lu(A.entries);
    if (lu.rcond() < 1e-12)
        throw singular_matrix_error("modulation matrix is numerically singular");
    return lu.inverse();
}

Cvec demodulate(const Cvec& u, const Cmat& B, const Rvec& alphas, int subcarriers) {
    const int N = static_cast<int>(B.rows());
    if (u.size() != N) throw domain_error("sample vector length mismatch");
    const int M = N / subcarriers;
    if (alphas.size() != subcarriers) throw domain_error("allocation length mismatch");
    for (int k = 0; k < subcarriers; ++k)
        if (alphas[k] <= 0.0) throw domain_error("demodulation needs positive subcarrier power");

    Cvec shat = B * u;
    for (int m = 0; m < M; ++m)
        for (int k = 0; k < subcarriers; ++k)
            shat[m * subcarriers + k] /= std::sqrt(alphas[k]);
    return shat;
}

}  // namespace gfdmcr
