#include "specfilt/coherence.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "specfilt/homalg.hpp"

namespace specfilt {

std::string to_string(CoherenceStatus s) {
    switch (s) {
        case CoherenceStatus::coherent: return "coherent";
        case CoherenceStatus::not_coherent: return "not_coherent";
        case CoherenceStatus::unknown: return "unknown";
    }
    return "?";
}

CoherenceEngine::CoherenceEngine(const PrimeCatalog& cat, size_t bass_bound)
    : cat_(&cat), bass_bound_(bass_bound) {
    if (bass_bound_ < cat.dim_ring())
        throw std::invalid_argument("bass bound below dim R");
}

void CoherenceEngine::declare_d_form(const SpecSubset& phi, std::vector<Polynomial> seq) {
    // sanity: the declared D(seq) must trace to phi on the catalog
    SpecSubset trace = SpecSubset::empty(*cat_);
    for (size_t i = 0; i < cat_->size(); ++i) {
        bool in_v = true;
        for (const auto& f : seq)
            if (!cat_->prime(i).contains_poly(f)) { in_v = false; break; }
        if (!in_v) trace = trace.with(i);
    }
    if (!(trace == phi))
        throw std::invalid_argument("declared D-form does not match the subset's extension");
    d_forms_[phi.bits()] = std::move(seq);
}

void CoherenceEngine::add_witness(std::string name, FPModule M) {
    witnesses_.emplace_back(std::move(name), std::move(M));
}

size_t CoherenceEngine::min_coherent_level(uint64_t bits) const {
    auto it = store_.find(bits);
    if (it == store_.end()) return SIZE_MAX;
    size_t best = SIZE_MAX;
    for (const auto& [lvl, st] : it->second)
        if (st.status == CoherenceStatus::coherent) best = std::min(best, lvl);
    return best;
}

std::optional<size_t> CoherenceEngine::max_refuted_level(uint64_t bits) const {
    auto it = store_.find(bits);
    if (it == store_.end()) return std::nullopt;
    std::optional<size_t> best;
    for (const auto& [lvl, st] : it->second)
        if (st.status == CoherenceStatus::not_coherent && lvl != SIZE_MAX)
            best = best ? std::max(*best, lvl) : lvl;
    return best;
}

const RefutationWitness* CoherenceEngine::stored_witness(uint64_t bits,
                                                         size_t at_or_above) const {
    auto it = store_.find(bits);
    if (it == store_.end()) return nullptr;
    for (const auto& [lvl, st] : it->second)
        if (st.status == CoherenceStatus::not_coherent && lvl != SIZE_MAX &&
            lvl >= at_or_above && st.witness)
            return &*st.witness;
    return nullptr;
}

void CoherenceEngine::record(uint64_t bits, Level n, CoherenceStatus st,
                             std::optional<RefutationWitness> witness) {
    if (st == CoherenceStatus::unknown) return;
    size_t key = level_key(n);
    if (st == CoherenceStatus::coherent) {
        auto refuted = max_refuted_level(bits);
        if (refuted && *refuted >= key)
            throw ContradictionError("verdict store contradiction at level " + n.to_string());
    } else {
        if (n.infinite)
            throw ContradictionError("refutation at level infinity contradicts R0");
        if (min_coherent_level(bits) <= key)
            throw ContradictionError("verdict store contradiction at level " + n.to_string());
    }
    store_[bits][key] = {st, std::move(witness)};
}

std::vector<std::pair<std::string, FPModule>> CoherenceEngine::default_witnesses() const {
    std::vector<std::pair<std::string, FPModule>> out;
    const PolyRing& R = cat_->ring();
    out.emplace_back("R", FPModule::free_module(R, 1));
    for (size_t i = 0; i < cat_->size(); ++i) {
        const Ideal& p = cat_->prime(i);
        if (p.is_zero()) continue;
        out.emplace_back("R/" + cat_->name(i), FPModule::quotient_ring(p));
        // first syzygy of R/p: the ideal p as a module
        ModuleMap row(R, 1, p.gens().size());
        for (size_t j = 0; j < p.gens().size(); ++j) row.at(0, j) = p.gens()[j];
        ModuleMap sy = syzygy(row);
        out.emplace_back("syz(R/" + cat_->name(i) + ")", FPModule(sy));
    }
    return out;
}

bool CoherenceEngine::seq_is_squarefree_monomials(const std::vector<Polynomial>& seq,
                                                  SquarefreeMonomialIdeal* out) const {
    try {
        SquarefreeMonomialIdeal a =
            SquarefreeMonomialIdeal::from_polynomials(cat_->ring(), seq);
        if (out) *out = a;
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

CoherenceVerdict CoherenceEngine::verdict(const SpecSubset& phi, Level n) {
    CoherenceVerdict v;
    v.subset_bits = phi.bits();
    v.level = n;
    size_t key = level_key(n);

    // stored verdicts, closed up under monotonicity
    if (min_coherent_level(phi.bits()) <= key) {
        v.status = CoherenceStatus::coherent;
        v.trace.push_back({"store", "coherent at a lower level; monotonicity"});
        return v;
    }
    if (auto r = max_refuted_level(phi.bits()); r && !n.infinite && *r >= n.n) {
        v.status = CoherenceStatus::not_coherent;
        if (const RefutationWitness* w = stored_witness(phi.bits(), n.n)) v.witness = *w;
        v.trace.push_back({"store", "refuted at a higher level; monotonicity"});
        return v;
    }

    // R0: every subset is inf-coherent
    if (n.infinite) {
        v.status = CoherenceStatus::coherent;
        v.trace.push_back({"R0", "every subset is inf-coherent"});
        record(phi.bits(), n, v.status);
        return v;
    }

    SubsetPredicates preds = subset_predicates(phi);

    // R1: 0-coherent = specialization-closed
    if (preds.specialization_closed) {
        v.status = CoherenceStatus::coherent;
        v.trace.push_back({"R1", "specialization-closed, hence coherent at every level"});
        record(phi.bits(), Level::at(0), v.status);
        return v;
    }
    if (n.n == 0) {
        v.status = CoherenceStatus::not_coherent;
        RefutationWitness w;
        w.kind = "poset";
        for (size_t i = 0; i < cat_->size() && !w.poset_pair; ++i) {
            if (!phi.contains(i)) continue;
            for (size_t j = 0; j < cat_->size(); ++j)
                if (i != j && cat_->leq(i, j) && !phi.contains(j)) {
                    w.poset_pair = {i, j};
                    w.detail = cat_->name(i) + " in the subset, " + cat_->name(j) +
                               " above it outside";
                    break;
                }
        }
        v.trace.push_back({"R1", "not specialization-closed"});
        record(phi.bits(), n, v.status, w);
        v.witness = std::move(w);
        return v;
    }

    // R2: dim R <= n forces coherence of every subset
    if (cat_->dim_ring() <= n.n) {
        v.status = CoherenceStatus::coherent;
        v.trace.push_back({"R2", "dim R <= n"});
        record(phi.bits(), Level::at(cat_->dim_ring()), v.status);
        return v;
    }

    auto dit = d_forms_.find(phi.bits());

    // R3 (positive side): D(x_1..x_k) is k-coherent
    if (dit != d_forms_.end() && dit->second.size() <= n.n) {
        v.status = CoherenceStatus::coherent;
        v.trace.push_back({"R3", "declared D-form on " + std::to_string(dit->second.size()) +
                                     " elements"});
        record(phi.bits(), Level::at(dit->second.size()), v.status);
        return v;
    }

    // R6 (refutation): complement specialization-closed and realized as
    // V(squarefree monomial a); witness with H^{<=n}_a = 0 and H^{n+1}_a != 0,
    // located through grade (depth sensitivity), cross-checked by the Cech path
    SpecSubset comp = phi.complement();
    SquarefreeMonomialIdeal a = SquarefreeMonomialIdeal::zero(cat_->ring());
    if (dit != d_forms_.end() && subset_predicates(comp).specialization_closed &&
        seq_is_squarefree_monomials(dit->second, &a)) {
        auto pool = default_witnesses();
        for (const auto& [wname, wmod] : witnesses_) pool.emplace_back(wname, wmod);
        for (const auto& [wname, wmod] : pool) {
            GradeResult g = grade(a.to_ideal(), wmod);
            if (g.infinite || !g.value || *g.value != n.n + 1) continue;
            // cross-check through the sign-pattern path when the witness is
            // R or a squarefree quotient
            std::optional<CechModule> cm;
            if (wmod.presentation().cols == 0 && wmod.gens() == 1)
                cm = CechModule::whole_ring();
            else if (wmod.gens() == 1) {
                std::vector<Polynomial> rels;
                for (size_t j = 0; j < wmod.presentation().cols; ++j)
                    rels.push_back(wmod.presentation().at(0, j));
                SquarefreeMonomialIdeal J = SquarefreeMonomialIdeal::zero(cat_->ring());
                if (seq_is_squarefree_monomials(rels, &J))
                    cm = CechModule::quotient_by(J);
            }
            if (cm) {
                auto profile = cech_nonzero_profile(a, *cm);
                size_t least = profile.size();
                for (size_t i = 0; i < profile.size(); ++i)
                    if (profile[i]) { least = i; break; }
                if (least != n.n + 1)
                    throw EngineError("R6 witness: grade and Cech paths disagree");
            }
            v.status = CoherenceStatus::not_coherent;
            RefutationWitness w;
            w.kind = "local_cohomology";
            w.module_desc = wname;
            w.nonvanishing_degree = n.n + 1;
            w.detail = "H^{<=" + std::to_string(n.n) + "} vanish on " + wname +
                       ", H^{" + std::to_string(n.n + 1) + "} does not";
            v.trace.push_back({"R6", "local-cohomology refutation against V-form complement"});
            record(phi.bits(), n, v.status, w);
            v.witness = std::move(w);
            return v;
        }
    }

    // R3 (refutation side): a declared regular sequence of length k makes
    // D(seq) not (k-1)-coherent
    if (dit != d_forms_.end() && n.n < dit->second.size()) {
        size_t k = dit->second.size();
        GradeResult g = grade(Ideal(cat_->ring(), dit->second),
                              FPModule::free_module(cat_->ring(), 1));
        if (!g.infinite && g.value && *g.value == k) {
            v.status = CoherenceStatus::not_coherent;
            RefutationWitness w;
            w.kind = "regular_sequence";
            w.module_desc = "R";
            w.nonvanishing_degree = k;
            w.detail = "declared sequence is R-regular of length " + std::to_string(k);
            v.trace.push_back({"R3", "regular D-form sequence refutes below its length"});
            record(phi.bits(), Level::at(k - 1), v.status, w);
            v.witness = std::move(w);
            return v;
        }
    }

    // R4: intersections of known-coherent subsets
    for (auto it1 = store_.begin(); it1 != store_.end(); ++it1) {
        if (min_coherent_level(it1->first) > key) continue;
        for (auto it2 = std::next(it1); it2 != store_.end(); ++it2) {
            if (min_coherent_level(it2->first) > key) continue;
            if ((it1->first & it2->first) == phi.bits()) {
                v.status = CoherenceStatus::coherent;
                v.trace.push_back({"R4", "intersection of two stored coherent subsets"});
                record(phi.bits(), n, v.status);
                return v;
            }
        }
    }

    // R5: Phi = Psi \ Phi0 for a known-coherent Psi, under height/dim bounds
    {
        uint64_t full = SpecSubset::full(*cat_).bits();
        uint64_t rest = full & ~phi.bits();
        for (uint64_t extra = rest;; extra = (extra - 1) & rest) {
            if (extra != 0) {  // extra == 0 would mean Psi == Phi
                SpecSubset psi(*cat_, phi.bits() | extra);
                bool known = min_coherent_level(psi.bits()) <= key ||
                             subset_predicates(psi).specialization_closed;
                if (known) {
                    bool hyp_height = true, hyp_dim = true;
                    for (size_t i = 0; i < cat_->size(); ++i) {
                        if (psi.contains(i) && !phi.contains(i) && cat_->height(i) > n.n)
                            hyp_height = false;
                        if (psi.contains(i) && cat_->dim_ring() - cat_->height(i) > n.n)
                            hyp_dim = false;
                    }
                    if (hyp_height || hyp_dim) {
                        v.status = CoherenceStatus::coherent;
                        v.trace.push_back(
                            {"R5", std::string("difference from coherent superset under the ") +
                                       (hyp_height ? "height" : "dimension") + " hypothesis"});
                        record(phi.bits(), n, v.status);
                        return v;
                    }
                }
            }
            if (extra == 0) break;
        }
    }

    // R7: propagate along restrictions. A restriction is the intersection of
    // the subset with the generalization-closure of p, which is an
    // intersection of one-element D-sets and therefore 1-coherent; both
    // directions below need n >= 1, which holds here since level 0 is always
    // settled by R1 above.
    for (size_t p = 0; p < cat_->size(); ++p) {
        SpecSubset r = restrict_at(phi, p);
        if (r == phi) continue;
        if (auto m = max_refuted_level(r.bits()); m && *m >= n.n) {
            v.status = CoherenceStatus::not_coherent;
            RefutationWitness w;
            w.kind = "restriction";
            w.detail = "restriction at " + cat_->name(p) + " already refuted";
            v.trace.push_back({"R7", "refuted restriction at " + cat_->name(p)});
            record(phi.bits(), n, v.status, w);
            v.witness = std::move(w);
            return v;
        }
    }
    for (const auto& [bits, lv] : store_) {
        if (min_coherent_level(bits) > key || bits == phi.bits()) continue;
        SpecSubset psi(*cat_, bits);
        for (size_t p = 0; p < cat_->size(); ++p)
            if (restrict_at(psi, p) == phi) {
                v.status = CoherenceStatus::coherent;
                v.trace.push_back(
                    {"R7", "restriction of stored coherent " + psi.to_string()});
                record(phi.bits(), n, v.status);
                return v;
            }
    }

    v.status = CoherenceStatus::unknown;
    v.trace.push_back({"none", "no rule applies; unknown is a legitimate outcome"});
    return v;
}

FiltrationReport CoherenceEngine::filtration(const SpecSubset& phi) {
    FiltrationReport rep;
    rep.subset_bits = phi.bits();
    rep.predicates = subset_predicates(phi);
    CoherenceStatus prev = CoherenceStatus::unknown;
    for (size_t k = 0; k <= cat_->dim_ring(); ++k) {
        CoherenceVerdict v = verdict(phi, Level::at(k));
        if (prev == CoherenceStatus::coherent && v.status != CoherenceStatus::coherent)
            throw EngineError("filtration not monotone");
        prev = v.status;
        FiltrationLevel fl{Level::at(k), v.status, v.trace.empty() ? "" : v.trace.back().rule,
                           v.status == CoherenceStatus::coherent &&
                               rep.predicates.generalization_closed};
        if (v.status == CoherenceStatus::coherent && !rep.first_coherent)
            rep.first_coherent = k;
        rep.levels.push_back(std::move(fl));
    }
    CoherenceVerdict vi = verdict(phi, Level::inf());
    rep.levels.push_back({Level::inf(), vi.status,
                          vi.trace.empty() ? "" : vi.trace.back().rule,
                          vi.status == CoherenceStatus::coherent &&
                              rep.predicates.generalization_closed});
    return rep;
}

bool CoherenceEngine::c_phi_membership(const FPModule& M, const SpecSubset& phi, size_t n) {
    if (n > bass_bound_) throw std::invalid_argument("level above the Bass bound");
    const BassTable& t = bass_.get(M, *cat_, bass_bound_);
    for (size_t p = 0; p < cat_->size(); ++p) {
        if (phi.contains(p)) continue;
        for (size_t i = 0; i <= n; ++i)
            if (t.mu[p][i] > 0) return false;
    }
    return true;
}

bool CoherenceEngine::supp_inverse_membership(const FPModule& M, const SpecSubset& phi) {
    const BassTable& t = bass_.get(M, *cat_, bass_bound_);
    bool by_supp = small_support(M, t, *cat_).subset_of(phi);
    bool by_cphi = c_phi_membership(M, phi, bass_bound_);
    if (by_supp != by_cphi)
        throw EngineError("supp^{-1} and C_Phi at the bound disagree");
    return by_supp;
}

namespace {

bool window_has(int j, int i, Level n, bool open_interval) {
    // open_interval: j in (i-n, i+n), j != i; else j in [i-n, i+n]
    if (n.infinite) return open_interval ? j != i : true;
    long lo = static_cast<long>(i) - static_cast<long>(n.n);
    long hi = static_cast<long>(i) + static_cast<long>(n.n);
    if (open_interval) return j != i && j > lo && j < hi;
    return j >= lo && j <= hi;
}

}  // namespace

TriState CoherenceEngine::consistency_check(const FPComplex& X, const SpecSubset& phi,
                                            Level n, int i) {
    if (!supp_complex(X, *cat_).subset_of(phi)) return TriState::not_applicable;
    for (int j = X.lo(); j <= X.hi(); ++j) {
        if (!window_has(j, i, n, true)) continue;
        if (!cohomology(X, j).is_zero()) return TriState::not_applicable;
    }
    FPModule h = cohomology(X, i);
    if (h.is_zero()) return TriState::yes;
    return small_support(h, bass_.get(h, *cat_, bass_bound_), *cat_).subset_of(phi)
               ? TriState::yes
               : TriState::no;
}

TriState CoherenceEngine::uniformity_check(const FPComplex& X, const SpecSubset& phi,
                                           Level n, int i) {
    if (!supp_complex(X, *cat_).subset_of(phi)) return TriState::not_applicable;
    for (int j = X.lo(); j <= X.hi(); ++j) {
        if (window_has(j, i, n, true) && !cohomology(X, j).is_zero())
            return TriState::not_applicable;
        if (window_has(j, i, n, false)) {
            const FPModule& c = X.term(j);
            if (c.is_zero()) continue;
            if (!small_support(c, bass_.get(c, *cat_, bass_bound_), *cat_).subset_of(phi))
                return TriState::not_applicable;
        }
    }
    for (const FPModule& m : {cycles(X, i), cocycle_quotient(X, i)}) {
        if (m.is_zero()) continue;
        if (!small_support(m, bass_.get(m, *cat_, bass_bound_), *cat_).subset_of(phi))
            return TriState::no;
    }
    return TriState::yes;
}

bool CoherenceEngine::certify_exact(const ExactSeq& s) const {
    try {
        FPComplex X(s.left.ring(), 0, {s.left, s.middle, s.right}, {s.inj, s.sur});
        return cohomology(X, 0).is_zero() && cohomology(X, 1).is_zero() &&
               cohomology(X, 2).is_zero();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<ExactSeq> CoherenceEngine::generate_sequences(
    uint64_t seed, size_t count, const std::vector<FPModule>& extra_pool) {
    const PolyRing& R = cat_->ring();
    std::vector<FPModule> pool;
    pool.push_back(FPModule::free_module(R, 1));
    for (size_t i = 0; i < cat_->size(); ++i)
        if (!cat_->prime(i).is_zero())
            pool.push_back(FPModule::quotient_ring(cat_->prime(i)));
    for (const auto& m : extra_pool) pool.push_back(m);

    std::mt19937_64 rng(seed);
    auto pick = [&]() -> const FPModule& {
        return pool[rng() % pool.size()];
    };

    std::vector<ExactSeq> out;
    size_t attempts = 0;
    while (out.size() < count && attempts < count * 8) {
        ++attempts;
        size_t kind = rng() % 3;
        if (kind <= 1) {
            const FPModule& L = pick();
            const FPModule& N = pick();
            std::optional<ModuleMap> phi;
            if (kind == 1) phi = ext1_nonzero_cocycle(N, L);
            if (!phi) {  // split, also the fallback when Ext^1(N, L) = 0
                FPModule M = direct_sum(L, N);
                ModuleMap inj(R, L.gens() + N.gens(), L.gens());
                for (size_t i = 0; i < L.gens(); ++i) inj.at(i, i) = R.one();
                ModuleMap sur(R, N.gens(), L.gens() + N.gens());
                for (size_t i = 0; i < N.gens(); ++i) sur.at(i, L.gens() + i) = R.one();
                ExactSeq s{L, M, N, std::move(inj), std::move(sur), "split"};
                if (certify_exact(s)) out.push_back(std::move(s));
                continue;
            }
            const ModuleMap& A1 = N.presentation();
            size_t r0 = N.gens(), rL = L.gens();
            ModuleMap rel1(R, r0 + rL, A1.cols);
            for (size_t i = 0; i < r0; ++i)
                for (size_t j = 0; j < A1.cols; ++j) rel1.at(i, j) = A1.at(i, j);
            for (size_t b = 0; b < rL; ++b)
                for (size_t j = 0; j < A1.cols; ++j) rel1.at(r0 + b, j) = -phi->at(b, j);
            ModuleMap rel2(R, r0 + rL, L.presentation().cols);
            for (size_t b = 0; b < rL; ++b)
                for (size_t j = 0; j < L.presentation().cols; ++j)
                    rel2.at(r0 + b, j) = L.presentation().at(b, j);
            FPModule E(ModuleMap::hstack(rel1, rel2));
            ModuleMap inj(R, r0 + rL, rL);
            for (size_t b = 0; b < rL; ++b) inj.at(r0 + b, b) = R.one();
            ModuleMap sur(R, r0, r0 + rL);
            for (size_t i = 0; i < r0; ++i) sur.at(i, i) = R.one();
            ExactSeq s{L, E, N, std::move(inj), std::move(sur), "extension"};
            if (certify_exact(s)) out.push_back(std::move(s));
        } else {  // koszul truncation: 0 -> Z^i -> K^i -> B^{i+1} -> 0
            std::vector<Polynomial> xs;
            for (size_t v = 0; v < R.nvars(); ++v)
                if (rng() % 2) xs.push_back(R.var(v));
            if (xs.empty()) xs.push_back(R.var(0));
            FPComplex K = koszul(xs);
            int i = static_cast<int>(rng() % (K.hi() + 1));
            if (i >= K.hi()) continue;
            ModuleMap zk = kernel_preimage(K.differential(i), ModuleMap(R, K.term(i + 1).gens(), 0));
            if (zk.cols == 0) continue;
            FPModule Z(syzygy(zk));
            ModuleMap d = K.differential(i);
            FPModule B(syzygy(d));  // image of d^i presented on the columns of d^i
            ModuleMap sur = ModuleMap::identity(R, K.term(i).gens());
            // B's generators are d^i(e_j); the surjection sends e_j there
            ExactSeq s{Z, K.term(i), B, zk, sur, "koszul"};
            if (certify_exact(s)) out.push_back(std::move(s));
        }
    }
    return out;
}

ClosureReport CoherenceEngine::closure_test(const SpecSubset& phi, Level n, uint64_t seed,
                                            size_t min_sequences,
                                            const std::vector<FPModule>& extra_pool) {
    ClosureReport rep;
    auto seqs = generate_sequences(seed, min_sequences, extra_pool);
    rep.sequences = seqs.size();

    CoherenceVerdict v = verdict(phi, n);
    bool coh = v.status == CoherenceStatus::coherent;
    size_t nn = n.infinite ? bass_bound_ : n.n;

    auto in_cn = [&](const FPModule& M, size_t k) { return c_phi_membership(M, phi, k); };
    auto in_supp_inv = [&](const FPModule& M) { return supp_inverse_membership(M, phi); };

    auto check = [&](bool hyp, bool concl, const std::string& what, const ExactSeq& s) {
        if (!hyp) return;
        ++rep.instances;
        if (!concl) {
            ++rep.violations;
            rep.failures.push_back(what + " on a " + s.kind + " sequence");
        }
    };

    for (const auto& s : seqs) {
        for (size_t k = 0; k <= std::min(nn + 1, bass_bound_); ++k) {
            bool Lk = in_cn(s.left, k), Mk = in_cn(s.middle, k), Nk = in_cn(s.right, k);
            bool Nk1 = k == 0 ? true : in_cn(s.right, k - 1);
            bool Mk1 = k == 0 ? true : in_cn(s.middle, k - 1);
            check(Lk && Nk, Mk, "horseshoe (i) at level " + std::to_string(k), s);
            check(Mk && Nk1, Lk, "horseshoe (ii) at level " + std::to_string(k), s);
            check(Lk && Mk1, k == 0 ? true : in_cn(s.right, k - 1),
                  "horseshoe (iii) at level " + std::to_string(k), s);
        }
        // closure of supp^{-1}(Phi): extensions always; kernels of epis and
        // cokernels of monos once Phi is decided coherent at n
        bool Ls = in_supp_inv(s.left), Ms = in_supp_inv(s.middle), Ns = in_supp_inv(s.right);
        check(Ls && Ns, Ms, "extension closure", s);
        if (coh) {
            if (nn == 0) {
                check(Ms, Ls && Ns, "sub/quotient closure at level 0", s);
            } else {
                check(Ms && Ns, Ls, "kernel-of-epi closure", s);
                check(Ls && Ms, Ns, "cokernel-of-mono closure", s);
            }
        }
    }
    return rep;
}

}  // namespace specfilt
