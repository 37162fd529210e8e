#include "specfilt/homalg.hpp"

#include <algorithm>

namespace specfilt {

FPComplex::FPComplex(PolyRing ring, int lo, std::vector<FPModule> terms,
                     std::vector<ModuleMap> maps)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)), maps_(std::move(maps)),
      zero_(ModuleMap(ring_, 0, 0)) {
    if (terms_.empty()) throw std::invalid_argument("complex needs at least one term");
    if (maps_.size() + 1 != terms_.size())
        throw std::invalid_argument("complex needs one map per adjacent pair");
    for (size_t k = 0; k < maps_.size(); ++k) {
        if (maps_[k].rows != terms_[k + 1].gens() || maps_[k].cols != terms_[k].gens())
            throw std::invalid_argument("differential shape mismatch");
        // the map must descend: d(relations of the source) falls into the
        // target's relations
        ModuleMap pushed = maps_[k].compose(terms_[k].presentation());
        const ModuleGB& tgt = terms_[k + 1].relations_gb();
        for (size_t j = 0; j < pushed.cols; ++j)
            if (!tgt.contains_column(pushed, j))
                throw std::invalid_argument("differential does not descend");
    }
    for (size_t k = 0; k + 1 < maps_.size(); ++k) {
        ModuleMap sq = maps_[k + 1].compose(maps_[k]);
        const ModuleGB& tgt = terms_[k + 2].relations_gb();
        for (size_t j = 0; j < sq.cols; ++j)
            if (!tgt.contains_column(sq, j))
                throw std::invalid_argument("malformed complex: composite nonzero");
    }
}

FPComplex FPComplex::stalk(const FPModule& M, int degree) {
    return FPComplex(M.ring(), degree, {M}, {});
}

const FPModule& FPComplex::term(int i) const {
    if (i < lo() || i > hi()) return zero_;
    return terms_[static_cast<size_t>(i - lo_)];
}

ModuleMap FPComplex::differential(int i) const {
    if (i < lo() || i > hi()) return ModuleMap(ring_, 0, 0);
    if (i == hi()) return ModuleMap(ring_, 0, term(i).gens());
    return maps_[static_cast<size_t>(i - lo_)];
}

bool FPComplex::all_terms_free() const {
    for (const auto& t : terms_)
        if (t.presentation().cols != 0) return false;
    return true;
}

namespace {

// ker(V : R^r -> coker relsT) modulo (im U + relsS), presented on kernel
// generators
FPModule homology_at(const ModuleMap& U, const ModuleMap& relsS, const ModuleMap& V,
                     const ModuleMap& relsT) {
    ModuleMap K = kernel_preimage(V, relsT);
    ModuleMap denom = ModuleMap::hstack(U, relsS);
    return presented_subquotient(K, denom);
}

}  // namespace

FPModule cohomology(const FPComplex& X, int i) {
    const PolyRing& R = X.ring();
    if (i < X.lo() || i > X.hi()) return FPModule(ModuleMap(R, 0, 0));
    ModuleMap V = X.differential(i);
    ModuleMap U = i > X.lo() ? X.differential(i - 1) : ModuleMap(R, X.term(i).gens(), 0);
    return homology_at(U, X.term(i).presentation(), V, X.term(i + 1).presentation());
}

FPModule cycles(const FPComplex& X, int i) {
    const PolyRing& R = X.ring();
    if (i < X.lo() || i > X.hi()) return FPModule(ModuleMap(R, 0, 0));
    ModuleMap K = kernel_preimage(X.differential(i), X.term(i + 1).presentation());
    return presented_subquotient(K, X.term(i).presentation());
}

FPModule cocycle_quotient(const FPComplex& X, int i) {
    const PolyRing& R = X.ring();
    if (i < X.lo() || i > X.hi()) return FPModule(ModuleMap(R, 0, 0));
    ModuleMap U = i > X.lo() ? X.differential(i - 1) : ModuleMap(R, X.term(i).gens(), 0);
    ModuleMap pres = ModuleMap::hstack(X.term(i).presentation(), U);
    return FPModule(trim_presentation(std::move(pres)));
}

namespace {

// Hom(F_j, N) = N^{rj}; precomposition with A : F_s -> F_t becomes the
// block matrix with scalar blocks A[t][s] * I_{rN}
ModuleMap hom_map(const PolyRing& R, const ModuleMap& A, size_t rN) {
    ModuleMap m(R, A.cols * rN, A.rows * rN);
    for (size_t s = 0; s < A.cols; ++s)
        for (size_t t = 0; t < A.rows; ++t) {
            const Polynomial& e = A.at(t, s);
            if (e.is_zero()) continue;
            for (size_t b = 0; b < rN; ++b) m.at(s * rN + b, t * rN + b) = e;
        }
    return m;
}

// F_j tensor N = N^{rj}; A : F_s -> F_t induces blocks A[t][s] * I_{rN}
ModuleMap tensor_map(const PolyRing& R, const ModuleMap& A, size_t rN) {
    ModuleMap m(R, A.rows * rN, A.cols * rN);
    for (size_t t = 0; t < A.rows; ++t)
        for (size_t s = 0; s < A.cols; ++s) {
            const Polynomial& e = A.at(t, s);
            if (e.is_zero()) continue;
            for (size_t b = 0; b < rN; ++b) m.at(t * rN + b, s * rN + b) = e;
        }
    return m;
}

ModuleMap power_relations(const FPModule& N, size_t copies) {
    ModuleMap rel(N.ring(), 0, 0);
    for (size_t i = 0; i < copies; ++i) rel = ModuleMap::block_diag(rel, N.presentation());
    return rel;
}

}  // namespace

FPModule ext(size_t i, const FPModule& M, const FPModule& N, size_t bound) {
    if (!M.ring().same_ring(N.ring())) throw std::invalid_argument("ring mismatch");
    const PolyRing& R = M.ring();
    auto res = M.free_resolution(i + 1, bound);
    size_t rN = N.gens();

    size_t r_i = i == 0 ? M.gens() : res[i - 1].cols;
    ModuleMap V = hom_map(R, res[i], rN);                      // D^i -> D^{i+1}
    ModuleMap U = i == 0 ? ModuleMap(R, r_i * rN, 0)
                         : hom_map(R, res[i - 1], rN);         // D^{i-1} -> D^i
    return homology_at(U, power_relations(N, r_i), V, power_relations(N, res[i].cols));
}

FPModule tor(size_t i, const FPModule& M, const FPModule& N, size_t bound) {
    if (!M.ring().same_ring(N.ring())) throw std::invalid_argument("ring mismatch");
    const PolyRing& R = M.ring();
    auto res = M.free_resolution(i + 1, bound);
    size_t rN = N.gens();

    size_t r_i = i == 0 ? M.gens() : res[i - 1].cols;
    size_t r_im1 = i == 0 ? 0 : (i == 1 ? M.gens() : res[i - 2].cols);
    ModuleMap V = i == 0 ? ModuleMap(R, 0, r_i * rN)
                         : tensor_map(R, res[i - 1], rN);      // F_i ox N -> F_{i-1} ox N
    ModuleMap U = tensor_map(R, res[i], rN);                   // F_{i+1} ox N -> F_i ox N
    return homology_at(U, power_relations(N, r_i), V, power_relations(N, r_im1));
}

std::optional<ModuleMap> ext1_nonzero_cocycle(const FPModule& N, const FPModule& L) {
    const PolyRing& R = N.ring();
    auto res = N.free_resolution(2);
    size_t rL = L.gens();
    size_t r1 = res[0].cols;
    if (rL == 0 || r1 == 0) return std::nullopt;

    ModuleMap V = hom_map(R, res[1], rL);                     // D^1 -> D^2
    ModuleMap U = hom_map(R, res[0], rL);                     // D^0 -> D^1
    ModuleMap K = kernel_preimage(V, power_relations(L, res[1].cols));
    ModuleGB cobound =
        ModuleGB::of_columns(ModuleMap::hstack(U, power_relations(L, r1)));
    for (size_t j = 0; j < K.cols; ++j) {
        if (cobound.contains_column(K, j)) continue;
        // reshape the column of D^1 = L^{r1} into a matrix F_1 -> cover(L)
        ModuleMap phi(R, rL, r1);
        for (size_t t = 0; t < r1; ++t)
            for (size_t b = 0; b < rL; ++b) phi.at(b, t) = K.at(t * rL + b, j);
        return phi;
    }
    return std::nullopt;
}

GradeResult grade(const Ideal& a, const FPModule& M) {
    const PolyRing& R = M.ring();
    if (a.is_unit() && !M.is_zero())
        throw std::invalid_argument("grade: ideal must be proper");
    FPModule Ra = FPModule::quotient_ring(a);
    size_t dim = R.nvars();
    GradeResult g;
    if (!M.is_zero()) {
        for (size_t i = 0; i <= dim; ++i) {
            if (!ext(i, Ra, M).is_zero()) {
                g.value = i;
                return g;
            }
        }
    }
    bool aM_equals_M = base_change(M, a).is_zero();
    if (!aM_equals_M)
        throw EngineError("grade: all Ext vanish but a*M != M");
    g.infinite = true;
    g.annihilates = true;
    return g;
}

FPModule gamma_torsion(const Ideal& a, const FPModule& M) {
    const PolyRing& R = M.ring();
    if (a.is_unit()) throw std::invalid_argument("gamma_torsion: ideal must be proper");
    size_t r = M.gens();
    if (a.is_zero()) return M;  // Gamma over V(0) is the identity
    if (r == 0) return FPModule(ModuleMap(R, 0, 0));
    const auto& gs = a.gens();
    ModuleMap G(R, gs.size() * r, r);
    for (size_t k = 0; k < gs.size(); ++k)
        for (size_t i = 0; i < r; ++i) G.at(k * r + i, i) = gs[k];

    auto stacked = [&](const ModuleMap& span) {
        ModuleMap D(R, 0, 0);
        for (size_t k = 0; k < gs.size(); ++k) D = ModuleMap::block_diag(D, span);
        return D;
    };

    ModuleMap torsion(R, r, 0);  // generators of (0 : a^t) within R^r
    for (int t = 0; t < 64; ++t) {
        ModuleMap window = ModuleMap::hstack(torsion, M.presentation());
        ModuleMap K = kernel_preimage(G, stacked(window));
        // stabilized when span(K)+rels == span(torsion)+rels
        ModuleGB prev = ModuleGB::of_columns(window);
        bool stable = true;
        for (size_t j = 0; j < K.cols && stable; ++j)
            if (!prev.contains_column(K, j)) stable = false;
        if (stable) return presented_subquotient(torsion, M.presentation());
        torsion = K;
    }
    throw EngineError("gamma_torsion failed to stabilize");
}

namespace {

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        if (k == 0) break;
        size_t i = k;
        bool adv = false;
        while (i-- > 0) {
            if (pick[i] < n - (k - i)) {
                ++pick[i];
                for (size_t t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
                adv = true;
                break;
            }
        }
        if (!adv) break;
    }
    return out;
}

}  // namespace

FPComplex koszul(const std::vector<Polynomial>& xs) {
    if (xs.empty()) throw std::invalid_argument("koszul: empty sequence");
    const PolyRing& R = xs.front().ring();
    for (const auto& x : xs)
        if (!x.ring().same_ring(R)) throw std::invalid_argument("ring mismatch");
    size_t n = xs.size();

    std::vector<std::vector<std::vector<size_t>>> levels;
    for (size_t k = 0; k <= n; ++k) levels.push_back(subsets_of_size(n, k));

    auto index_of = [](const std::vector<std::vector<size_t>>& level,
                       const std::vector<size_t>& s) {
        return static_cast<size_t>(std::find(level.begin(), level.end(), s) - level.begin());
    };

    std::vector<FPModule> terms;
    for (size_t k = 0; k <= n; ++k)
        terms.push_back(FPModule::free_module(R, levels[k].size()));

    std::vector<ModuleMap> maps;
    for (size_t k = 0; k < n; ++k) {
        ModuleMap d(R, levels[k + 1].size(), levels[k].size());
        for (size_t j = 0; j < levels[k].size(); ++j) {
            const auto& S = levels[k][j];
            for (size_t v = 0; v < n; ++v) {
                if (std::find(S.begin(), S.end(), v) != S.end()) continue;
                std::vector<size_t> T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), v), v);
                size_t below = static_cast<size_t>(
                    std::count_if(S.begin(), S.end(), [v](size_t s) { return s < v; }));
                d.at(index_of(levels[k + 1], T), j) = below % 2 == 0 ? xs[v] : -xs[v];
            }
        }
        maps.push_back(std::move(d));
    }
    return FPComplex(R, 0, std::move(terms), std::move(maps));
}

}  // namespace specfilt
