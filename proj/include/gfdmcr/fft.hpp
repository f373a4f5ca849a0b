// Thin FFTW wrapper with a cached-plan, thread-safe execute path.
#ifndef GFDMCR_FFT_HPP
#define GFDMCR_FFT_HPP

#include "gfdmcr/common.hpp"

namespace gfdmcr {

// In-place complex DFT, forward = exp(-j2*pi*...) convention, unscaled.
void fft_inplace(Cvec& data, bool forward);

Cvec fft(const Cvec& data, bool forward);

// Inverse DFT scaled by 1/N (so ifft(fft(x)) == x).
Cvec ifft_normalized(const Cvec& data);

}  // namespace gfdmcr

#endif
