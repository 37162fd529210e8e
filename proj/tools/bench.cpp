// Benchmark comparing the serial reference kernels with their OpenMP
// counterparts: Bass-table fills over a catalog and Cech sign-pattern sweeps.

#include <chrono>
#include <cstdio>

#include "specfilt/parallel.hpp"

using namespace specfilt;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Ideal ideal_of(const PolyRing& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, R));
    return Ideal(R, std::move(ps));
}

}  // namespace

int main() {
    std::printf("specfilt_bench: OpenMP %s, max threads %d\n\n",
                par::openmp_enabled() ? "on" : "off", par::max_threads());

    PolyRing R({"x", "y", "z"}, CoefficientField::rationals());
    PrimeCatalog cat(R,
                     {ideal_of(R, {}), ideal_of(R, {"x"}), ideal_of(R, {"y"}),
                      ideal_of(R, {"z"}), ideal_of(R, {"x", "y"}), ideal_of(R, {"x", "z"}),
                      ideal_of(R, {"y", "z"}), ideal_of(R, {"x", "y", "z"})},
                     {"p0", "px", "py", "pz", "pxy", "pxz", "pyz", "m"});

    std::vector<FPModule> mods;
    mods.push_back(FPModule::quotient_ring(ideal_of(R, {"x*y", "y*z"})));
    mods.push_back(FPModule::quotient_ring(ideal_of(R, {"x^2 - y*z"})));
    mods.push_back(direct_sum(FPModule::quotient_ring(ideal_of(R, {"x"})),
                              FPModule::quotient_ring(ideal_of(R, {"y", "z"}))));

    std::printf("%-28s %12s %12s %8s\n", "bass_table (bound 4)", "serial ms", "openmp ms",
                "match");
    for (size_t k = 0; k < mods.size(); ++k) {
        // fresh module copies so neither mode benefits from warm caches
        FPModule a(mods[k].presentation()), b(mods[k].presentation());
        auto t0 = std::chrono::steady_clock::now();
        BassTable ts = par::bass_table(a, cat, 4, par::Mode::serial);
        double serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        BassTable tp = par::bass_table(b, cat, 4, par::Mode::openmp);
        double parallel = ms_since(t0);
        std::printf("%-28s %12.1f %12.1f %8s\n", ("module " + std::to_string(k)).c_str(),
                    serial, parallel, ts.mu == tp.mu ? "yes" : "NO");
    }

    PolyRing R6({"x1", "x2", "x3", "x4", "x5", "x6"}, CoefficientField::rationals());
    std::vector<Polynomial> gens;
    for (size_t v = 0; v + 1 < R6.nvars(); ++v)
        gens.push_back(R6.var(v) * R6.var(v + 1));
    SquarefreeMonomialIdeal path = SquarefreeMonomialIdeal::from_polynomials(R6, gens);
    CechModule M = CechModule::quotient_by(
        SquarefreeMonomialIdeal::from_polynomials(R6, {R6.var(0) * R6.var(2)}));

    std::printf("\n%-28s %12s %12s %8s\n", "cech_profile (6 vars)", "serial ms", "openmp ms",
                "match");
    auto t0 = std::chrono::steady_clock::now();
    auto ps = par::cech_profile(path, M, par::Mode::serial);
    double serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto pp = par::cech_profile(path, M, par::Mode::openmp);
    double parallel = ms_since(t0);
    std::printf("%-28s %12.1f %12.1f %8s\n", "path ideal / R mod x1x3", serial, parallel,
                ps == pp ? "yes" : "NO");
    return 0;
}
