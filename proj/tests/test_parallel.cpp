#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specfilt/parallel.hpp"
#include "test_helpers.hpp"

using namespace tsf;

TEST_CASE("parallel bass tables match the serial reference") {
    PlaneSetup S;
    std::vector<FPModule> mods = {
        FPModule::free_module(S.R, 1),
        FPModule::quotient_ring(ideal(S.R, {"x"})),
        FPModule::quotient_ring(ideal(S.R, {"x*y"})),
        direct_sum(FPModule::quotient_ring(ideal(S.R, {"x"})),
                   FPModule::quotient_ring(ideal(S.R, {"x", "y"}))),
    };
    for (const auto& M : mods) {
        BassTable ref = bass_table(M, S.cat, 4);
        FPModule fresh(M.presentation());
        BassTable par_serial = par::bass_table(fresh, S.cat, 4, par::Mode::serial);
        FPModule fresh2(M.presentation());
        BassTable par_omp = par::bass_table(fresh2, S.cat, 4, par::Mode::openmp);
        CHECK(ref.mu == par_serial.mu);
        CHECK(ref.mu == par_omp.mu);
    }
}

TEST_CASE("parallel cech profiles match the serial reference") {
    PolyRing R = QQ({"x", "y", "z"});
    auto sq = [&](const std::vector<std::string>& gens) {
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_poly(g, R));
        return SquarefreeMonomialIdeal::from_polynomials(R, ps);
    };
    std::vector<SquarefreeMonomialIdeal> as = {sq({"x"}), sq({"x", "y"}), sq({"x*y", "y*z"}),
                                               sq({"x", "y", "z"})};
    std::vector<CechModule> ms = {CechModule::whole_ring(),
                                  CechModule::quotient_by(sq({"x*y"})),
                                  CechModule::quotient_by(sq({"y"}))};
    for (const auto& a : as)
        for (const auto& m : ms) {
            auto ref = cech_nonzero_profile(a, m);
            CHECK(par::cech_profile(a, m, par::Mode::serial) == ref);
            CHECK(par::cech_profile(a, m, par::Mode::openmp) == ref);
        }
}

TEST_CASE("thread report is sane") {
    CHECK(par::max_threads() >= 1);
}
