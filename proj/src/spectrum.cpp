#include "specfilt/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace specfilt {

PrimeCatalog::PrimeCatalog(PolyRing ring, std::vector<Ideal> primes,
                           std::vector<std::string> names)
    : ring_(std::move(ring)), primes_(std::move(primes)), names_(std::move(names)) {
    size_t n = primes_.size();
    if (n > 64) throw std::invalid_argument("catalog too large for the bitset");
    if (names_.empty())
        for (size_t i = 0; i < n; ++i) names_.push_back("p" + std::to_string(i));
    if (names_.size() != n) throw std::invalid_argument("one name per prime");
    for (const auto& p : primes_) {
        if (!p.ring().same_ring(ring_)) throw std::invalid_argument("ring mismatch");
        if (p.is_unit()) throw std::invalid_argument("catalog primes must be proper");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (ideal_equal(primes_[i], primes_[j]))
                throw std::invalid_argument("catalog primes must be pairwise distinct");

    leq_.assign(n * n, false);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            leq_[i * n + j] = ideal_contains(primes_[j], primes_[i]);  // p_i <= p_j
    // antisymmetry of the containment poset
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && leq_[i * n + j] && leq_[j * n + i])
                throw EngineError("catalog poset violates antisymmetry");

    dim_ring_ = krull_dim(Ideal(ring_, {}));
    heights_.resize(n);
    max_flags_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        size_t dq = krull_dim(primes_[i]);
        heights_[i] = dim_ring_ - dq;
        max_flags_[i] = dq == 0;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && leq_[i * n + j] && !(heights_[i] < heights_[j]))
                throw EngineError("catalog heights not strictly monotone along containment");
}

SpecSubset::SpecSubset(const PrimeCatalog& cat, uint64_t bits) : cat_(&cat), bits_(bits) {
    if (cat.size() < 64) {
        uint64_t mask = (1ULL << cat.size()) - 1;
        if (bits_ & ~mask) throw std::invalid_argument("bits outside the catalog");
    }
}

SpecSubset SpecSubset::full(const PrimeCatalog& cat) {
    uint64_t m = cat.size() >= 64 ? ~0ULL : (1ULL << cat.size()) - 1;
    return SpecSubset(cat, m);
}

size_t SpecSubset::count() const {
    return static_cast<size_t>(__builtin_popcountll(bits_));
}

SpecSubset SpecSubset::with(size_t i) const { return SpecSubset(*cat_, bits_ | (1ULL << i)); }

SpecSubset SpecSubset::complement() const {
    return SpecSubset(*cat_, full(*cat_).bits() & ~bits_);
}

SpecSubset SpecSubset::intersect(const SpecSubset& o) const {
    return SpecSubset(*cat_, bits_ & o.bits_);
}

SpecSubset SpecSubset::unite(const SpecSubset& o) const {
    return SpecSubset(*cat_, bits_ | o.bits_);
}

std::string SpecSubset::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (size_t i = 0; i < cat_->size(); ++i) {
        if (!contains(i)) continue;
        if (!first) os << ", ";
        os << cat_->name(i);
        first = false;
    }
    os << "}";
    return os.str();
}

size_t rank_over_domain(const ModuleMap& A, const Ideal& p) {
    const PolyRing& R = A.ring;
    const auto& gb = p.groebner_basis();
    auto nf = [&](const Polynomial& f) { return normal_form(f, gb); };

    std::vector<std::vector<Polynomial>> m(A.rows, std::vector<Polynomial>(A.cols, R.zero()));
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) m[i][j] = nf(A.at(i, j));

    size_t rank = 0, top = 0;
    Polynomial prev_pivot = R.one();
    for (size_t col = 0; col < A.cols && top < A.rows; ++col) {
        size_t piv = top;
        while (piv < A.rows && m[piv][col].is_zero()) ++piv;
        if (piv == A.rows) continue;
        std::swap(m[piv], m[top]);
        const Polynomial pivot = m[top][col];
        for (size_t i = top + 1; i < A.rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Polynomial f = m[i][col];
            bool divisible = true;
            std::vector<Polynomial> updated(A.cols, R.zero());
            for (size_t j = col; j < A.cols; ++j)
                updated[j] = nf(pivot * m[i][j] - f * m[top][j]);
            // Bareiss step: divide the whole row by the previous pivot when
            // the division is exact on representatives
            std::vector<Polynomial> divided(A.cols, R.zero());
            for (size_t j = col; j < A.cols && divisible; ++j) {
                if (updated[j].is_zero()) continue;
                auto q = divide_exact(updated[j], prev_pivot);
                if (!q) divisible = false;
                else divided[j] = *q;
            }
            m[i] = divisible ? std::move(divided) : std::move(updated);
        }
        prev_pivot = pivot;
        ++rank;
        ++top;
    }
    return rank;
}

size_t fiber_dim(const FPModule& M, const Ideal& p) {
    return M.gens() - rank_over_domain(M.presentation(), p);
}

size_t bass_number(size_t i, const Ideal& p, const FPModule& M, size_t bound) {
    FPModule E = ext(i, FPModule::quotient_ring(p), M, bound);
    // Ext^i(R/p, M) is killed by p, so its fiber at p is its localization
    return fiber_dim(E, p);
}

BassTable bass_table(const FPModule& M, const PrimeCatalog& cat, size_t bound) {
    BassTable t;
    t.bound = bound;
    t.mu.assign(cat.size(), std::vector<size_t>(bound + 1, 0));
    for (size_t pi = 0; pi < cat.size(); ++pi) {
        FPModule Rp = FPModule::quotient_ring(cat.prime(pi));
        for (size_t i = 0; i <= bound; ++i)
            t.mu[pi][i] = fiber_dim(ext(i, Rp, M), cat.prime(pi));
    }
    return t;
}

const BassTable& BassCache::get(const FPModule& M, const PrimeCatalog& cat, size_t bound) {
    std::pair<const void*, size_t> key{M.key(), bound};
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    BassTable t = bass_table(M, cat, bound);
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, fresh] = memo_.try_emplace(key, std::move(t));
    if (fresh) pinned_.push_back(M);
    return it->second;
}

SpecSubset ass_primes(const FPModule& M, const PrimeCatalog& cat) {
    SpecSubset s = SpecSubset::empty(cat);
    for (size_t pi = 0; pi < cat.size(); ++pi)
        if (bass_number(0, cat.prime(pi), M) > 0) s = s.with(pi);
    return s;
}

SpecSubset ass_primes(const BassTable& t, const PrimeCatalog& cat) {
    SpecSubset s = SpecSubset::empty(cat);
    for (size_t pi = 0; pi < cat.size(); ++pi)
        if (t.mu[pi][0] > 0) s = s.with(pi);
    return s;
}

SpecSubset closed_support_trace(const FPModule& M, const PrimeCatalog& cat) {
    Ideal f0 = fitting_ideal_0(M);
    SpecSubset s = SpecSubset::empty(cat);
    for (size_t pi = 0; pi < cat.size(); ++pi)
        if (ideal_contains(cat.prime(pi), f0)) s = s.with(pi);
    return s;
}

SpecSubset small_support(const FPModule& M, const BassTable& t, const PrimeCatalog& cat) {
    SpecSubset bass = SpecSubset::empty(cat);
    for (size_t pi = 0; pi < cat.size(); ++pi)
        for (size_t i = 0; i <= t.bound; ++i)
            if (t.mu[pi][i] > 0) {
                bass = bass.with(pi);
                break;
            }
    SpecSubset closed = closed_support_trace(M, cat);
    if (!(bass == closed))
        throw EngineError("support master check failed: Bass-table union " +
                          bass.to_string() + " vs V(F_0) trace " + closed.to_string());
    return bass;
}

SpecSubset small_support(const FPModule& M, const PrimeCatalog& cat, size_t bound) {
    if (bound < cat.dim_ring())
        throw std::invalid_argument("small_support needs bound >= dim R");
    return small_support(M, bass_table(M, cat, bound), cat);
}

namespace {

// H^i dims of (X tensor kappa(p)) for a complex of free modules, which is its
// own degreewise free replacement
bool free_complex_supports_at(const FPComplex& X, const Ideal& p) {
    for (int i = X.lo(); i <= X.hi(); ++i) {
        size_t r = X.term(i).gens();
        size_t rk_d = rank_over_domain(X.differential(i), p);
        size_t rk_prev = i > X.lo() ? rank_over_domain(X.differential(i - 1), p) : 0;
        if (r > rk_d + rk_prev) return true;  // dim H^i = r - rk(d^i) - rk(d^{i-1}) > 0
    }
    return false;
}

}  // namespace

SpecSubset supp_complex(const FPComplex& X, const PrimeCatalog& cat) {
    if (X.all_terms_free()) {
        SpecSubset s = SpecSubset::empty(cat);
        for (size_t pi = 0; pi < cat.size(); ++pi)
            if (free_complex_supports_at(X, cat.prime(pi))) s = s.with(pi);
        return s;
    }
    // bounded complexes of f.p. modules: supp X is the union of the supports
    // of the cohomologies
    SpecSubset s = SpecSubset::empty(cat);
    for (int i = X.lo(); i <= X.hi(); ++i) {
        FPModule h = cohomology(X, i);
        if (h.is_zero()) continue;
        s = s.unite(small_support(h, cat, cat.default_bass_bound()));
    }
    return s;
}

SubsetPredicates subset_predicates(const SpecSubset& phi) {
    const PrimeCatalog& cat = phi.catalog();
    SubsetPredicates r{true, true, false};
    for (size_t i = 0; i < cat.size(); ++i) {
        if (!phi.contains(i)) continue;
        for (size_t j = 0; j < cat.size(); ++j) {
            if (cat.leq(i, j) && !phi.contains(j)) r.specialization_closed = false;
            if (cat.leq(j, i) && !phi.contains(j)) r.generalization_closed = false;
        }
    }
    SubsetPredicates comp{true, true, false};
    SpecSubset c = phi.complement();
    for (size_t i = 0; i < cat.size(); ++i) {
        if (!c.contains(i)) continue;
        for (size_t j = 0; j < cat.size(); ++j)
            if (cat.leq(i, j) && !c.contains(j)) comp.specialization_closed = false;
    }
    r.clopen_in_catalog = r.specialization_closed && comp.specialization_closed;
    return r;
}

SpecSubset restrict_at(const SpecSubset& phi, size_t p_index) {
    const PrimeCatalog& cat = phi.catalog();
    if (p_index >= cat.size()) throw std::invalid_argument("prime not in catalog");
    SpecSubset s = SpecSubset::empty(cat);
    for (size_t i = 0; i < cat.size(); ++i)
        if (phi.contains(i) && cat.leq(i, p_index)) s = s.with(i);
    return s;
}

bool ind_artinian_check(const FPModule& M, const PrimeCatalog& cat) {
    SpecSubset ass = ass_primes(M, cat);
    for (size_t i = 0; i < cat.size(); ++i)
        if (ass.contains(i) && !cat.is_maximal(i)) return false;
    return true;
}

}  // namespace specfilt
