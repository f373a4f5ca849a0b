// Shared basics: error types, unit conversions, deterministic seed streams.
#ifndef GFDMCR_COMMON_HPP
#define GFDMCR_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gfdmcr {

using cxd = std::complex<double>;
using Cvec = Eigen::VectorXcd;
using Cmat = Eigen::MatrixXcd;
using Rvec = Eigen::VectorXd;
using Rmat = Eigen::MatrixXd;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct deep_fade_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dBm <-> linear watts. Figure axes are dBm, all math is linear.
inline double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt * 1000.0); }
inline double to_db(double x) { return 10.0 * std::log10(x); }

// splitmix64 stream derivation: mixes a master seed with stream/index tags so
// parallel trials get independent, reproducible generators.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
    return splitmix64(splitmix64(master ^ (stream * 0x9e3779b97f4a7c15ULL)) + index);
}

}  // namespace gfdmcr

#endif
