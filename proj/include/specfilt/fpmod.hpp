#pragma once

#include <memory>
#include <vector>

#include "specfilt/groebner.hpp"
#include "specfilt/polyring.hpp"

namespace specfilt {

/// Matrix of polynomials acting between free covers (row-major).
struct ModuleMap {
    PolyRing ring;
    size_t rows = 0, cols = 0;
    std::vector<Polynomial> entries;

    ModuleMap() = default;
    ModuleMap(PolyRing r, size_t rows_, size_t cols_);

    const Polynomial& at(size_t i, size_t j) const { return entries[i * cols + j]; }
    Polynomial& at(size_t i, size_t j) { return entries[i * cols + j]; }

    static ModuleMap identity(const PolyRing& r, size_t n);
    static ModuleMap hstack(const ModuleMap& a, const ModuleMap& b);
    static ModuleMap vstack(const ModuleMap& a, const ModuleMap& b);
    static ModuleMap block_diag(const ModuleMap& a, const ModuleMap& b);
    ModuleMap compose(const ModuleMap& o) const;  // this * o
    bool is_zero() const;
    bool operator==(const ModuleMap& o) const;
    std::string to_string() const;
};

/// Term of a free-module element: position, monomial, coefficient.
struct ModTerm {
    size_t pos;
    Monomial m;
    Rational c;
};

/// Sparse free-module element, terms strictly descending in the
/// position-over-term order (lower position dominates).
using ModVec = std::vector<ModTerm>;

int modterm_cmp(const PolyRing& R, const ModTerm& a, const ModTerm& b);
ModVec modvec_normalize(const PolyRing& R, ModVec v);
ModVec modvec_add(const PolyRing& R, const ModVec& a, const ModVec& b);
ModVec modvec_scale(const PolyRing& R, const ModVec& a, const Rational& c);
ModVec modvec_mono_mul(const PolyRing& R, const ModVec& a, const Monomial& m, const Rational& c);
ModVec column_as_modvec(const ModuleMap& A, size_t j);
ModuleMap columns_to_map(const PolyRing& R, size_t rank, const std::vector<ModVec>& cols);

/// Reduced Groebner basis of a submodule of a free module, usable for
/// membership tests and normal forms.
class ModuleGB {
public:
    ModuleGB() = default;
    ModuleGB(PolyRing ring, size_t rank, std::vector<ModVec> gens);
    static ModuleGB of_columns(const ModuleMap& A);

    const std::vector<ModVec>& basis() const { return basis_; }
    size_t rank() const { return rank_; }
    ModVec normal_form(ModVec v) const;
    bool contains(const ModVec& v) const;
    bool contains_column(const ModuleMap& A, size_t j) const;

private:
    PolyRing ring_;
    size_t rank_ = 0;
    std::vector<ModVec> basis_;
};

/// Columns generating ker(A) in R^{cols(A)}.
ModuleMap syzygy(const ModuleMap& A);

/// Finitely presented module, the cokernel of its presentation matrix.
/// Rank-0 target encodes the zero module. Shared write-once caches make
/// concurrent reads safe.
class FPModule {
public:
    FPModule() = default;
    explicit FPModule(ModuleMap presentation);
    static FPModule free_module(const PolyRing& R, size_t rank);
    static FPModule quotient_ring(const Ideal& I);  // R/I

    const PolyRing& ring() const;
    const ModuleMap& presentation() const;
    size_t gens() const { return presentation().rows; }

    const ModuleGB& relations_gb() const;
    bool is_zero() const;

    /// Maps A_1..A_length of a free resolution, A_1 the presentation.
    std::vector<ModuleMap> free_resolution(size_t length, size_t bound = 8) const;

    /// Identity-based handle for memoization.
    const void* key() const;

private:
    struct Data;
    std::shared_ptr<Data> data_;
};

Ideal fitting_ideal_0(const FPModule& M);
FPModule base_change(const FPModule& M, const Ideal& I);  // M tensor R/I
FPModule direct_sum(const FPModule& M, const FPModule& N);

/// Generators u in R^rows(V) whose image under V lies in the column span of
/// D (the kernel preimage used for cycles, torsion and Hom kernels).
ModuleMap kernel_preimage(const ModuleMap& V, const ModuleMap& D);

/// (span G + span D)/span D presented on the columns of G, trimmed.
FPModule presented_subquotient(const ModuleMap& G, const ModuleMap& D);

/// Isomorphic presentation with unit-scalar pivots eliminated and zero
/// columns dropped.
ModuleMap trim_presentation(ModuleMap A);

}  // namespace specfilt
