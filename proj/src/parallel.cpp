#include "specfilt/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specfilt::par {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

BassTable bass_table(const FPModule& M, const PrimeCatalog& cat, size_t bound, Mode mode) {
    if (mode == Mode::serial || !openmp_enabled()) return specfilt::bass_table(M, cat, bound);

    BassTable t;
    t.bound = bound;
    t.mu.assign(cat.size(), std::vector<size_t>(bound + 1, 0));
    int n = static_cast<int>(cat.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int pi = 0; pi < n; ++pi) {
        // each task owns its R/p module, so resolution caches are task-local;
        // M's caches are mutex-guarded and idempotent
        FPModule Rp = FPModule::quotient_ring(cat.prime(static_cast<size_t>(pi)));
        for (size_t i = 0; i <= bound; ++i)
            t.mu[static_cast<size_t>(pi)][i] =
                fiber_dim(ext(i, Rp, M), cat.prime(static_cast<size_t>(pi)));
    }
    return t;
}

std::vector<char> cech_profile(const SquarefreeMonomialIdeal& a, const CechModule& M,
                               Mode mode) {
    if (mode == Mode::serial || !openmp_enabled()) return cech_nonzero_profile(a, M);

    size_t s = a.gen_masks().size();
    auto strands = cech_strands(a.ring(), M);
    std::vector<char> nz(s + 1, 0);
    int n = static_cast<int>(strands.size());
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<char> local(s + 1, 0);
#pragma omp for schedule(static)
        for (int k = 0; k < n; ++k) {
            auto h = cech_strand_dims(a, M, strands[static_cast<size_t>(k)].first,
                                      strands[static_cast<size_t>(k)].second);
            for (size_t i = 0; i <= s; ++i)
                if (h[i] > 0) local[i] = 1;
        }
#pragma omp critical
        for (size_t i = 0; i <= s; ++i)
            if (local[i]) nz[i] = 1;
    }
#else
    (void)n;
#endif
    return nz;
}

}  // namespace specfilt::par
