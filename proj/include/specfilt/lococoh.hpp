#pragma once

#include <optional>
#include <utility>

#include "specfilt/groebner.hpp"

namespace specfilt {

/// Squarefree monomial ideal held as variable-subset bitmasks,
/// inclusion-minimal. The unit ideal is the empty subset; the zero ideal has
/// no generators.
class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal(PolyRing ring, std::vector<uint32_t> gen_masks);
    static SquarefreeMonomialIdeal from_polynomials(const PolyRing& ring,
                                                    const std::vector<Polynomial>& gens);
    static SquarefreeMonomialIdeal zero(const PolyRing& ring) { return {ring, {}}; }
    static SquarefreeMonomialIdeal unit(const PolyRing& ring) { return {ring, {0u}}; }

    const PolyRing& ring() const { return ring_; }
    const std::vector<uint32_t>& gen_masks() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }

    Ideal to_ideal() const;

private:
    PolyRing ring_;
    std::vector<uint32_t> gens_;
};

/// Fine-grading class of the Cech complex: which variables carry negative
/// exponents (the remaining ones are nonnegative).
struct SignPattern {
    std::vector<bool> negative;

    uint32_t mask() const;
    static SignPattern from_mask(size_t nvars, uint32_t m);
};

/// The coefficient module of a local cohomology computation: R itself or a
/// squarefree monomial quotient R/J. General modules are out of computable
/// scope here.
struct CechModule {
    std::optional<SquarefreeMonomialIdeal> quotient;  // nullopt = R

    static CechModule whole_ring() { return {std::nullopt}; }
    static CechModule quotient_by(SquarefreeMonomialIdeal J) { return {std::move(J)}; }
    bool is_ring() const { return !quotient.has_value(); }
};

/// Exact scalar dimensions of H^0..H^s of one strand (one (negative,
/// positive) support pair) of the Cech complex of `a` on `M`.
std::vector<size_t> cech_strand_dims(const SquarefreeMonomialIdeal& a, const CechModule& M,
                                     uint32_t neg_mask, uint32_t pos_mask);

/// All strand pairs that must be swept for a module: 2^n sign patterns for R,
/// refined by positive supports for quotients.
std::vector<std::pair<uint32_t, uint32_t>> cech_strands(const PolyRing& R, const CechModule& M);

/// H^i_a(M) != 0, exactly.
bool cech_cohomology_nonzero(const SquarefreeMonomialIdeal& a, const CechModule& M, size_t i);

/// Nonvanishing flags for all degrees 0..#gens(a).
std::vector<char> cech_nonzero_profile(const SquarefreeMonomialIdeal& a, const CechModule& M);

/// Greatest nonvanishing degree; nullopt when every degree vanishes.
std::optional<size_t> cohomological_dimension(const SquarefreeMonomialIdeal& a,
                                              const CechModule& M);

/// cd(a, M) <= dim M (Grothendieck bound).
bool grothendieck_bound_check(const SquarefreeMonomialIdeal& a, const CechModule& M);

enum class MayerVietorisResult { holds, check_failed, hypothesis_failed };

/// For a clopen split a + b = (1), a cap b = (0): verifies H^{>0}_a vanishes
/// on R and on every supplied squarefree quotient.
MayerVietorisResult mayer_vietoris_clopen_check(
    const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b,
    const std::vector<SquarefreeMonomialIdeal>& corpus);

}  // namespace specfilt
