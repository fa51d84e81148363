#pragma once

#include <vector>

#include "torusfs/grid.hpp"

namespace torusfs::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalized in-place DFT of a row-major rows x cols array. Forward uses
/// e^{-2 pi i ...}, Backward e^{+2 pi i ...}.
void fft2(std::vector<cplx>& data, int rows, int cols, FftDirection dir);

void fft1(std::vector<cplx>& data, FftDirection dir);

}  // namespace torusfs::detail
