#pragma once

#include "specfilt/lococoh.hpp"
#include "specfilt/spectrum.hpp"

namespace specfilt::par {

enum class Mode { serial, openmp };

bool openmp_enabled();
int max_threads();

/// Bass-table fill over the (prime, degree) grid. The serial mode is the
/// reference loop (identical to spectrum::bass_table); openmp distributes
/// primes across threads. Results are bit-identical across modes.
BassTable bass_table(const FPModule& M, const PrimeCatalog& cat, size_t bound, Mode mode);

/// Nonvanishing profile of H^*_a(M), swept over fine-grading strands; the
/// strand axis is embarrassingly parallel.
std::vector<char> cech_profile(const SquarefreeMonomialIdeal& a, const CechModule& M,
                               Mode mode);

}  // namespace specfilt::par
