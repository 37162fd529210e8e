#include "specfilt/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace specfilt {

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
    uint32_t deg;
};

bool pair_before(const PolyRing& R, const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = R.mono_cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

Polynomial spoly(const PolyRing& R, const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
    const Term& lf = f.leading();
    const Term& lg = g.leading();
    Polynomial a = f.mono_mul(lcm.div(lf.m), R.cdiv(Rational(1), lf.c));
    Polynomial b = g.mono_mul(lcm.div(lg.m), R.cdiv(Rational(1), lg.c));
    return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// Gebauer-Moeller pair update on inserting basis[t].
void update_pairs(const std::vector<Polynomial>& basis, std::vector<Pair>& pairs,
                  size_t t) {
    const Monomial& lt = basis[t].leading().m;

    std::vector<Pair> fresh;
    fresh.reserve(t);
    for (size_t i = 0; i < t; ++i)
        fresh.push_back({i, t, Monomial::lcm(basis[i].leading().m, lt), 0});
    for (auto& p : fresh) p.deg = p.lcm.deg();

    std::vector<bool> drop(fresh.size(), false);
    // M: a strictly smaller lcm among the new pairs supersedes
    for (size_t a = 0; a < fresh.size(); ++a)
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[a] || drop[b]) continue;
            if (!(fresh[b].lcm == fresh[a].lcm) && fresh[b].lcm.divides(fresh[a].lcm))
                drop[a] = true;
        }
    // F: keep one representative per lcm
    for (size_t a = 0; a < fresh.size(); ++a)
        for (size_t b = 0; b < a; ++b) {
            if (drop[a] || drop[b]) continue;
            if (fresh[a].lcm == fresh[b].lcm) drop[a] = true;
        }
    // B: coprime leading monomials
    for (size_t a = 0; a < fresh.size(); ++a)
        if (!drop[a] && coprime(basis[fresh[a].i].leading().m, lt)) drop[a] = true;

    // chain criterion against the old pair set
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        const Monomial& l = p.lcm;
        bool del = lt.divides(l) &&
                   !(Monomial::lcm(basis[p.i].leading().m, lt) == l) &&
                   !(Monomial::lcm(basis[p.j].leading().m, lt) == l);
        if (!del) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (size_t a = 0; a < fresh.size(); ++a)
        if (!drop[a]) pairs.push_back(std::move(fresh[a]));
}

std::vector<Polynomial> reduce_basis(const PolyRing& R, std::vector<Polynomial> basis) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (basis[j].leading().m.divides(basis[i].leading().m) &&
                !(i < j && basis[i].leading().m == basis[j].leading().m))
                keep[i] = false;
        }
    std::vector<Polynomial> mins;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) mins.push_back(basis[i].monic());

    // tail-reduce each against the others
    std::vector<Polynomial> out;
    for (size_t i = 0; i < mins.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < mins.size(); ++j)
            if (j != i) others.push_back(mins[j]);
        out.push_back(normal_form(mins[i], others).monic());
    }
    std::sort(out.begin(), out.end(), [&R](const Polynomial& a, const Polynomial& b) {
        return R.mono_cmp(a.leading().m, b.leading().m) > 0;
    });
    return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    std::vector<Pair> pairs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring().same_ring(ring)) throw std::invalid_argument("ring mismatch");
        Polynomial h = normal_form(g, basis);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        update_pairs(basis, pairs, basis.size() - 1);
    }
    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_before(ring, pairs[k], pairs[best])) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        Polynomial s = spoly(ring, basis[p.i], basis[p.j], p.lcm);
        Polynomial h = normal_form(s, basis);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        update_pairs(basis, pairs, basis.size() - 1);
    }
    return reduce_basis(ring, std::move(basis));
}

struct Ideal::Cache {
    std::once_flag flag;
    std::vector<Polynomial> gb;
};

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring().same_ring(ring_)) throw std::invalid_argument("ring mismatch");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    std::call_once(cache_->flag, [this] { cache_->gb = buchberger(ring_, gens_); });
    return cache_->gb;
}

bool Ideal::contains_poly(const Polynomial& f) const {
    return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    if (!I.ring().same_ring(J.ring())) throw std::invalid_argument("ring mismatch");
    for (const auto& g : J.gens())
        if (!I.contains_poly(g)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return I.groebner_basis() == J.groebner_basis();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> g = I.gens();
    g.insert(g.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(g));
}

namespace {

// inverse of map_to_ring: drop the first `k` (fresh) variables, which must
// not occur in f
Polynomial restrict_from_extended(const Polynomial& f, const PolyRing& orig, size_t k) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m(orig.nvars());
        for (size_t i = 0; i < k; ++i)
            if (t.m.e[i]) throw std::domain_error("fresh variable survives restriction");
        for (size_t i = k; i < t.m.e.size(); ++i) m.e[i - k] = t.m.e[i];
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(orig, std::move(ts));
}

bool involves_block(const Polynomial& f, size_t k) {
    for (const auto& t : f.terms())
        for (size_t i = 0; i < k; ++i)
            if (t.m.e[i]) return true;
    return false;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (!I.ring().same_ring(J.ring())) throw std::invalid_argument("ring mismatch");
    const PolyRing& R = I.ring();
    PolyRing E = R.extended({"#t"});
    Polynomial t = E.var(0);
    Polynomial one_minus_t = E.one() - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(t * map_to_ring(g, E, 1));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * map_to_ring(g, E, 1));
    auto gb = buchberger(E, gens);
    std::vector<Polynomial> out;
    for (const auto& g : gb)
        if (!involves_block(g, 1)) out.push_back(restrict_from_extended(g, R, 1));
    return Ideal(R, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("quotient by zero");
    if (f.is_constant()) return I;
    Ideal fI(I.ring(), {f});
    Ideal meet = ideal_intersect(I, fI);
    std::vector<Polynomial> out;
    for (const auto& g : meet.gens()) {
        auto q = divide_exact(g, f);
        if (!q) throw EngineError("quotient generator not divisible by f");
        out.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(out));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by zero");
    const PolyRing& R = I.ring();
    Ideal rab = [&] {
        if (f.is_constant()) return Ideal(R, I.gens());
        PolyRing E = R.extended({"#y"});
        Polynomial y = E.var(0);
        std::vector<Polynomial> gens;
        for (const auto& g : I.gens()) gens.push_back(map_to_ring(g, E, 1));
        gens.push_back(y * map_to_ring(f, E, 1) - E.one());
        auto gb = buchberger(E, gens);
        std::vector<Polynomial> out;
        for (const auto& g : gb)
            if (!involves_block(g, 1)) out.push_back(restrict_from_extended(g, R, 1));
        return Ideal(R, std::move(out));
    }();

    Ideal cur(R, I.gens());
    for (int guard = 0; guard < 256; ++guard) {
        Ideal next = ideal_quotient(cur, f);
        if (ideal_equal(next, cur)) break;
        cur = std::move(next);
    }
    if (!ideal_equal(rab, cur))
        throw EngineError("saturation routes disagree (Rabinowitsch vs iterated quotient)");
    return rab;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const PolyRing& R = I.ring();
    PolyRing E = R.extended({"#y"});
    Polynomial y = E.var(0);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(map_to_ring(g, E, 1));
    gens.push_back(y * map_to_ring(f, E, 1) - E.one());
    return Ideal(E, std::move(gens)).is_unit();
}

size_t krull_dim(const Ideal& I) {
    if (I.is_unit()) throw std::domain_error("unit ideal has empty spectrum");
    const auto& gb = I.groebner_basis();
    size_t n = I.ring().nvars();
    if (n > 24) throw std::invalid_argument("krull_dim: too many variables");
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.leading().m);

    size_t best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        size_t card = static_cast<size_t>(__builtin_popcount(s));
        if (card <= best) continue;
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (m.e[i] && !((s >> i) & 1)) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = card;
    }
    return best;
}

}  // namespace specfilt
