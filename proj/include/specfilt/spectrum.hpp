#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "specfilt/homalg.hpp"

namespace specfilt {

/// A finite declared list of prime ideals: the computable window into Spec R.
/// Primality of the entries is trusted, not verified; every statement made
/// over a catalog is catalog-relative.
class PrimeCatalog {
public:
    PrimeCatalog(PolyRing ring, std::vector<Ideal> primes,
                 std::vector<std::string> names = {});

    const PolyRing& ring() const { return ring_; }
    size_t size() const { return primes_.size(); }
    const Ideal& prime(size_t i) const { return primes_[i]; }
    const std::string& name(size_t i) const { return names_[i]; }

    bool leq(size_t i, size_t j) const { return leq_[i * primes_.size() + j]; }  // p_i <= p_j
    size_t height(size_t i) const { return heights_[i]; }
    bool is_maximal(size_t i) const { return max_flags_[i]; }
    size_t dim_ring() const { return dim_ring_; }
    size_t default_bass_bound() const { return dim_ring_ + 2; }

private:
    PolyRing ring_;
    std::vector<Ideal> primes_;
    std::vector<std::string> names_;
    std::vector<bool> leq_;
    std::vector<size_t> heights_;
    std::vector<bool> max_flags_;
    size_t dim_ring_;
};

/// Subset of the catalog as a bitset.
class SpecSubset {
public:
    SpecSubset() = default;
    SpecSubset(const PrimeCatalog& cat, uint64_t bits);
    static SpecSubset empty(const PrimeCatalog& cat) { return SpecSubset(cat, 0); }
    static SpecSubset full(const PrimeCatalog& cat);

    const PrimeCatalog& catalog() const { return *cat_; }
    bool contains(size_t i) const { return (bits_ >> i) & 1; }
    uint64_t bits() const { return bits_; }
    size_t count() const;

    SpecSubset with(size_t i) const;
    SpecSubset complement() const;  // catalog complement
    SpecSubset intersect(const SpecSubset& o) const;
    SpecSubset unite(const SpecSubset& o) const;
    bool subset_of(const SpecSubset& o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const SpecSubset& o) const { return bits_ == o.bits_; }

    std::string to_string() const;  // "{p, q}" using catalog names

private:
    const PrimeCatalog* cat_ = nullptr;
    uint64_t bits_ = 0;
};

/// The array mu_i(p, M) for catalog primes and 0 <= i <= bound: the module's
/// injective-resolution fingerprint.
struct BassTable {
    size_t bound = 0;
    std::vector<std::vector<size_t>> mu;  // mu[prime][i]
};

/// Rank of A over Frac(R/p): fraction-free elimination with zero tests by
/// normal form against GB(p); pivots on the first nonzero normal form in
/// column order.
size_t rank_over_domain(const ModuleMap& A, const Ideal& p);

/// dim over kappa(p) of the fiber M tensor kappa(p).
size_t fiber_dim(const FPModule& M, const Ideal& p);

/// mu_i(p, M) = dim_{kappa(p)} Ext^i_{R_p}(kappa(p), M_p).
size_t bass_number(size_t i, const Ideal& p, const FPModule& M,
                   size_t bound = kResolutionBound);

BassTable bass_table(const FPModule& M, const PrimeCatalog& cat, size_t bound);

/// Write-once memo of Bass tables keyed by module identity.
class BassCache {
public:
    const BassTable& get(const FPModule& M, const PrimeCatalog& cat, size_t bound);

private:
    std::mutex mu_;
    std::map<std::pair<const void*, size_t>, BassTable> memo_;
    std::vector<FPModule> pinned_;  // keep keyed modules alive
};

SpecSubset ass_primes(const FPModule& M, const PrimeCatalog& cat);
SpecSubset ass_primes(const BassTable& t, const PrimeCatalog& cat);

/// Catalog primes with some nonzero Bass number below the bound; cross-checked
/// against the catalog trace of V(F_0(M)). A mismatch is an engine bug.
SpecSubset small_support(const FPModule& M, const PrimeCatalog& cat, size_t bound);
SpecSubset small_support(const FPModule& M, const BassTable& t, const PrimeCatalog& cat);

/// Catalog trace of Supp M = V(F_0(M)).
SpecSubset closed_support_trace(const FPModule& M, const PrimeCatalog& cat);

/// Small support of a bounded complex via X tensor^L kappa(p).
SpecSubset supp_complex(const FPComplex& X, const PrimeCatalog& cat);

struct SubsetPredicates {
    bool specialization_closed;
    bool generalization_closed;
    bool clopen_in_catalog;
};

SubsetPredicates subset_predicates(const SpecSubset& phi);

/// {q in phi : q <= p}.
SpecSubset restrict_at(const SpecSubset& phi, size_t p_index);

/// Ass M inside Max R, catalog-relative (ind-artinian test).
bool ind_artinian_check(const FPModule& M, const PrimeCatalog& cat);

}  // namespace specfilt
