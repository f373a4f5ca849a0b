#include "gfdmcr/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gfdmcr {
namespace {

// Plan creation is not thread-safe in FFTW; executing a plan on new arrays is.
// Plans are created once per (size, direction) with FFTW_UNALIGNED so they can
// run on any heap buffer.
std::mutex g_plan_mutex;
std::map<std::pair<int, int>, fftw_plan> g_plans;

fftw_plan plan_for(int n, int sign) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    std::vector<cxd> probe(n);
    auto* buf = reinterpret_cast<fftw_complex*>(probe.data());
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    g_plans.emplace(key, p);
    return p;
}

}  // namespace

void fft_inplace(Cvec& data, bool forward) {
    const int n = static_cast<int>(data.size());
    if (n == 0) return;
    fftw_plan p = plan_for(n, forward ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

Cvec fft(const Cvec& data, bool forward) {
    Cvec out = data;
    fft_inplace(out, forward);
    return out;
}

Cvec ifft_normalized(const Cvec& data) {
    Cvec out = fft(data, false);
    out /= static_cast<double>(data.size());
    return out;
}

}  // namespace gfdmcr
