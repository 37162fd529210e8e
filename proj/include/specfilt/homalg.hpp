#pragma once

#include <map>
#include <optional>

#include "specfilt/fpmod.hpp"

namespace specfilt {

/// Bounded cochain complex of finitely presented modules. Differentials are
/// matrices acting on generator covers, checked to descend and to compose to
/// zero on generators.
class FPComplex {
public:
    /// terms[k] sits in degree lo+k; maps[k] : terms[k] -> terms[k+1].
    FPComplex(PolyRing ring, int lo, std::vector<FPModule> terms, std::vector<ModuleMap> maps);

    static FPComplex stalk(const FPModule& M, int degree);

    const PolyRing& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

    const FPModule& term(int i) const;       // zero module outside [lo, hi]
    ModuleMap differential(int i) const;     // d^i : term(i) -> term(i+1)
    bool all_terms_free() const;

private:
    PolyRing ring_;
    int lo_;
    std::vector<FPModule> terms_;
    std::vector<ModuleMap> maps_;
    FPModule zero_;
};

/// ker(d^i)/im(d^{i-1}) as a finitely presented module.
FPModule cohomology(const FPComplex& X, int i);

/// Cycles Z^i(X) and the cocycle quotient X^i/B^i(X) as modules.
FPModule cycles(const FPComplex& X, int i);
FPModule cocycle_quotient(const FPComplex& X, int i);

constexpr size_t kResolutionBound = 8;

/// H^i of Hom(free_resolution(M), N).
FPModule ext(size_t i, const FPModule& M, const FPModule& N, size_t bound = kResolutionBound);

/// H_i of free_resolution(M) tensor N (stored with cohomological signs).
FPModule tor(size_t i, const FPModule& M, const FPModule& N, size_t bound = kResolutionBound);

struct GradeResult {
    std::optional<size_t> value;  // least i with Ext^i(R/a, M) != 0
    bool infinite = false;        // all vanish; certified by a*M = M
    bool annihilates = false;     // the a*M = M witness fact
};

GradeResult grade(const Ideal& a, const FPModule& M);

/// Stabilized a-power torsion submodule (0 :_M a^t) of M.
FPModule gamma_torsion(const Ideal& a, const FPModule& M);

/// A cocycle F_1(N) -> cover(L) representing a nonzero class of Ext^1(N, L),
/// or nullopt when Ext^1(N, L) = 0. Feeds the pullback extension builder.
std::optional<ModuleMap> ext1_nonzero_cocycle(const FPModule& N, const FPModule& L);

/// Koszul cochain complex on xs, degrees 0..n.
FPComplex koszul(const std::vector<Polynomial>& xs);

}  // namespace specfilt
