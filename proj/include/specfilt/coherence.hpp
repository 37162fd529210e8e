#pragma once

#include <map>
#include <optional>
#include <string>

#include "specfilt/lococoh.hpp"
#include "specfilt/spectrum.hpp"

namespace specfilt {

/// Coherence level: a natural number or infinity.
struct Level {
    size_t n = 0;
    bool infinite = false;

    static Level at(size_t k) { return {k, false}; }
    static Level inf() { return {0, true}; }
    bool operator==(const Level& o) const {
        return infinite == o.infinite && (infinite || n == o.n);
    }
    std::string to_string() const { return infinite ? "inf" : std::to_string(n); }
};

/// The verdict store derived opposite statuses for one (subset, level):
/// an engine bug or a non-prime catalog entry.
struct ContradictionError : EngineError {
    using EngineError::EngineError;
};

enum class CoherenceStatus { coherent, not_coherent, unknown };

std::string to_string(CoherenceStatus s);

struct RefutationWitness {
    std::string kind;    // "poset" | "local_cohomology" | "regular_sequence"
    std::string detail;
    std::optional<std::pair<size_t, size_t>> poset_pair;  // p in Phi, q above, q not in Phi
    std::optional<std::string> module_desc;
    std::optional<size_t> nonvanishing_degree;            // the witnessed n+1
};

struct TraceStep {
    std::string rule;
    std::string note;
};

/// Three-valued answer for "Phi is n-coherent", with the applied-rule trace
/// and, for refutations, independently re-checkable witness data.
struct CoherenceVerdict {
    uint64_t subset_bits = 0;
    Level level;
    CoherenceStatus status = CoherenceStatus::unknown;
    std::vector<TraceStep> trace;
    std::optional<RefutationWitness> witness;
};

struct FiltrationLevel {
    Level level;
    CoherenceStatus status;
    std::string rule;
    bool primed;  // coherent and generalization-closed at this level
};

struct FiltrationReport {
    uint64_t subset_bits = 0;
    std::vector<FiltrationLevel> levels;  // 0..dim R, then inf
    SubsetPredicates predicates{};
    std::optional<size_t> first_coherent;
};

enum class TriState { yes, no, not_applicable };

struct ClosureReport {
    size_t sequences = 0;   // certified exact sequences generated
    size_t instances = 0;   // non-vacuous implication instances checked
    size_t violations = 0;
    std::vector<std::string> failures;
};

/// A certified short exact sequence 0 -> L -> M -> N -> 0 with cover maps.
struct ExactSeq {
    FPModule left, middle, right;
    ModuleMap inj, sur;
    std::string kind;
};

/// The verdict engine: rule base R0..R7 over a monotone verdict store.
/// Unknown is a legitimate outcome. The store raises on contradiction (which
/// signals an engine bug or a non-prime catalog entry).
class CoherenceEngine {
public:
    CoherenceEngine(const PrimeCatalog& cat, size_t bass_bound);

    const PrimeCatalog& catalog() const { return *cat_; }
    size_t bass_bound() const { return bass_bound_; }
    BassCache& bass_cache() { return bass_; }

    /// Declare that a subset was written as D(seq) intersected with the
    /// catalog; unlocks rules R3 and R6 for it.
    void declare_d_form(const SpecSubset& phi, std::vector<Polynomial> seq);

    /// Extra refutation witnesses beyond the automatic defaults.
    void add_witness(std::string name, FPModule M);

    CoherenceVerdict verdict(const SpecSubset& phi, Level n);
    FiltrationReport filtration(const SpecSubset& phi);

    /// mu_i(p, M) = 0 for every catalog p outside Phi and all 0 <= i <= n.
    bool c_phi_membership(const FPModule& M, const SpecSubset& phi, size_t n);

    /// small support inside Phi; cross-checked against C_Phi at the bound.
    bool supp_inverse_membership(const FPModule& M, const SpecSubset& phi);

    TriState consistency_check(const FPComplex& X, const SpecSubset& phi, Level n, int i);
    TriState uniformity_check(const FPComplex& X, const SpecSubset& phi, Level n, int i);

    ClosureReport closure_test(const SpecSubset& phi, Level n, uint64_t seed,
                               size_t min_sequences, const std::vector<FPModule>& extra_pool = {});

    /// Certified-exact-sequence generator (also used by the acceptance suite).
    std::vector<ExactSeq> generate_sequences(uint64_t seed, size_t count,
                                             const std::vector<FPModule>& extra_pool = {});

private:
    const PrimeCatalog* cat_;
    size_t bass_bound_;
    BassCache bass_;
    std::map<uint64_t, std::vector<Polynomial>> d_forms_;
    std::vector<std::pair<std::string, FPModule>> witnesses_;

    struct Stored {
        CoherenceStatus status;
        std::optional<RefutationWitness> witness;
    };
    // store: bits -> level key (inf = SIZE_MAX) -> decided verdict
    std::map<uint64_t, std::map<size_t, Stored>> store_;

    static size_t level_key(Level n) { return n.infinite ? SIZE_MAX : n.n; }
    size_t min_coherent_level(uint64_t bits) const;     // SIZE_MAX if none
    std::optional<size_t> max_refuted_level(uint64_t bits) const;
    const RefutationWitness* stored_witness(uint64_t bits, size_t at_or_above) const;
    void record(uint64_t bits, Level n, CoherenceStatus st,
                std::optional<RefutationWitness> witness = std::nullopt);

    std::vector<std::pair<std::string, FPModule>> default_witnesses() const;
    bool seq_is_squarefree_monomials(const std::vector<Polynomial>& seq,
                                     SquarefreeMonomialIdeal* out) const;
    bool certify_exact(const ExactSeq& s) const;
};

}  // namespace specfilt
