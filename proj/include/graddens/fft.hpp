#pragma once

#include <complex>
#include <span>
#include <vector>

namespace graddens {

/// Unnormalized forward DFT: out_k = sum_j in_j exp(-i 2 pi k j / n).
/// Any length n >= 1. Plans are cached per length, so repeated transforms
/// of the same size pay only the execution cost.
std::vector<std::complex<double>> fft_forward(std::span<const std::complex<double>> input);

}  // namespace graddens
