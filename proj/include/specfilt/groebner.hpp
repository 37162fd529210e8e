#pragma once

#include <memory>
#include <vector>

#include "specfilt/polyring.hpp"

namespace specfilt {

/// Ideal given by generators, with a write-once cache of the reduced Groebner
/// basis for the ring's order. Immutable; concurrent reads are safe and cache
/// fills are idempotent.
class Ideal {
public:
    Ideal() = default;
    Ideal(PolyRing ring, std::vector<Polynomial> gens);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    /// Reduced, monic, auto-reduced basis; deterministic.
    const std::vector<Polynomial>& groebner_basis() const;

    bool contains_poly(const Polynomial& f) const;
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }

private:
    PolyRing ring_;
    std::vector<Polynomial> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of span(gens) in the ring's order.
std::vector<Polynomial> buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens);

bool ideal_contains(const Ideal& I, const Ideal& J);  // I >= J
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// (I : f) for a single nonzero f.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

/// (I : f^inf), computed by Rabinowitsch elimination and by iterated
/// quotients; the two routes are cross-checked.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// f in sqrt(I)?
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Krull dimension of R/I via independent variable sets modulo the initial
/// ideal. Throws on the unit ideal.
size_t krull_dim(const Ideal& I);

}  // namespace specfilt
