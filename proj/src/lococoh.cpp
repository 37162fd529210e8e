#include "specfilt/lococoh.hpp"

#include <algorithm>

namespace specfilt {

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(PolyRing ring, std::vector<uint32_t> gen_masks)
    : ring_(std::move(ring)) {
    if (ring_.nvars() > 20)
        throw std::invalid_argument("too many variables for the sign-pattern sweep");
    uint32_t all = ring_.nvars() >= 32 ? ~0u : (1u << ring_.nvars()) - 1;
    for (uint32_t m : gen_masks)
        if (m & ~all) throw std::invalid_argument("generator mask outside the ring");
    // inclusion-minimal
    std::sort(gen_masks.begin(), gen_masks.end());
    gen_masks.erase(std::unique(gen_masks.begin(), gen_masks.end()), gen_masks.end());
    for (uint32_t m : gen_masks) {
        bool redundant = false;
        for (uint32_t o : gens_)
            if ((o & m) == o) { redundant = true; break; }
        if (!redundant) gens_.push_back(m);
    }
    // sorted ascending, a submask can only precede its supersets, so one pass
    // suffices; recheck for safety
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = 0; j < gens_.size(); ++j)
            if (i != j && (gens_[i] & gens_[j]) == gens_[i] && gens_[i] != gens_[j])
                throw EngineError("minimalization failed");
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::from_polynomials(
    const PolyRing& ring, const std::vector<Polynomial>& gens) {
    std::vector<uint32_t> masks;
    for (const auto& g : gens) {
        if (g.terms().size() != 1 || !g.terms()[0].c.is_one())
            throw std::invalid_argument("generator is not a monic monomial: " + g.to_string());
        uint32_t m = 0;
        const Monomial& mo = g.terms()[0].m;
        for (size_t v = 0; v < mo.e.size(); ++v) {
            if (mo.e[v] > 1)
                throw std::invalid_argument("generator is not squarefree: " + g.to_string());
            if (mo.e[v]) m |= 1u << v;
        }
        masks.push_back(m);
    }
    return SquarefreeMonomialIdeal(ring, std::move(masks));
}

Ideal SquarefreeMonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gs;
    for (uint32_t m : gens_) {
        Monomial mo(ring_.nvars());
        for (size_t v = 0; v < ring_.nvars(); ++v)
            if ((m >> v) & 1) mo.e[v] = 1;
        gs.push_back(ring_.monomial(mo, Rational(1)));
    }
    return Ideal(ring_, std::move(gs));
}

uint32_t SignPattern::mask() const {
    uint32_t m = 0;
    for (size_t i = 0; i < negative.size(); ++i)
        if (negative[i]) m |= 1u << i;
    return m;
}

SignPattern SignPattern::from_mask(size_t nvars, uint32_t m) {
    SignPattern p;
    p.negative.resize(nvars);
    for (size_t i = 0; i < nvars; ++i) p.negative[i] = (m >> i) & 1;
    return p;
}

namespace {

// rank of a small scalar matrix over the ring's coefficient field: the strand
// complexes can carry p-torsion, so positive characteristic matters
size_t rank_over_coefficients(const PolyRing& R, std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), rank = 0, top = 0;
    for (auto& row : m)
        for (auto& e : row) e = R.cnorm(e);
    for (size_t col = 0; col < cols && top < rows; ++col) {
        size_t piv = top;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[top]);
        for (size_t i = top + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            Rational f = R.cdiv(m[i][col], m[top][col]);
            for (size_t j = col; j < cols; ++j)
                m[i][j] = R.csub(m[i][j], R.cmul(f, m[top][j]));
        }
        ++rank;
        ++top;
    }
    return rank;
}

bool face_ok(const CechModule& M, uint32_t support) {
    if (M.is_ring()) return true;
    for (uint32_t g : M.quotient->gen_masks())
        if ((g & support) == g) return false;  // a J-generator divides
    return true;
}

}  // namespace

std::vector<size_t> cech_strand_dims(const SquarefreeMonomialIdeal& a, const CechModule& M,
                                     uint32_t neg_mask, uint32_t pos_mask) {
    if (neg_mask & pos_mask) throw std::invalid_argument("overlapping strand supports");
    const auto& gens = a.gen_masks();
    size_t s = gens.size();

    // enumerate subsets of generators per Cech degree
    std::vector<std::vector<uint32_t>> level(s + 1);  // subsets of {0..s-1} by size
    for (uint32_t sub = 0; sub < (1u << s); ++sub)
        level[static_cast<size_t>(__builtin_popcount(sub))].push_back(sub);

    auto piece_nonzero = [&](uint32_t sub) {
        uint32_t w = 0;
        for (size_t g = 0; g < s; ++g)
            if ((sub >> g) & 1) w |= gens[g];
        if ((neg_mask & ~w) != 0) return false;          // negatives must be inverted
        return face_ok(M, pos_mask | w);                 // and J must survive
    };

    std::vector<std::vector<char>> alive(s + 1);
    for (size_t i = 0; i <= s; ++i) {
        alive[i].resize(level[i].size());
        for (size_t k = 0; k < level[i].size(); ++k) alive[i][k] = piece_nonzero(level[i][k]);
    }

    // differential i -> i+1 restricted to alive pieces, with Cech signs
    auto diff_rank = [&](size_t i) -> size_t {
        if (i >= s) return 0;
        std::vector<size_t> src, dst;
        for (size_t k = 0; k < level[i].size(); ++k)
            if (alive[i][k]) src.push_back(k);
        for (size_t k = 0; k < level[i + 1].size(); ++k)
            if (alive[i + 1][k]) dst.push_back(k);
        if (src.empty() || dst.empty()) return 0;
        std::vector<std::vector<Rational>> m(dst.size(), std::vector<Rational>(src.size()));
        for (size_t cs = 0; cs < src.size(); ++cs) {
            uint32_t sub = level[i][src[cs]];
            for (size_t g = 0; g < s; ++g) {
                if ((sub >> g) & 1) continue;
                uint32_t tgt = sub | (1u << g);
                auto it = std::find(level[i + 1].begin(), level[i + 1].end(), tgt);
                size_t kt = static_cast<size_t>(it - level[i + 1].begin());
                if (!alive[i + 1][kt]) continue;
                auto jt = std::find(dst.begin(), dst.end(), kt);
                if (jt == dst.end()) continue;
                size_t below = static_cast<size_t>(__builtin_popcount(sub & ((1u << g) - 1)));
                m[static_cast<size_t>(jt - dst.begin())][cs] =
                    below % 2 == 0 ? Rational(1) : Rational(-1);
            }
        }
        return rank_over_coefficients(a.ring(), std::move(m));
    };

    std::vector<size_t> dims(s + 1, 0), h(s + 1, 0);
    for (size_t i = 0; i <= s; ++i)
        dims[i] = static_cast<size_t>(std::count(alive[i].begin(), alive[i].end(), 1));
    std::vector<size_t> rk(s + 1, 0);
    for (size_t i = 0; i <= s; ++i) rk[i] = diff_rank(i);
    for (size_t i = 0; i <= s; ++i) {
        size_t prev = i == 0 ? 0 : rk[i - 1];
        h[i] = dims[i] - rk[i] - prev;
    }
    return h;
}

std::vector<std::pair<uint32_t, uint32_t>> cech_strands(const PolyRing& R, const CechModule& M) {
    size_t n = R.nvars();
    std::vector<std::pair<uint32_t, uint32_t>> out;
    if (M.is_ring()) {
        // dims depend only on the negative support
        for (uint32_t neg = 0; neg < (1u << n); ++neg) out.push_back({neg, 0});
        return out;
    }
    for (uint32_t neg = 0; neg < (1u << n); ++neg) {
        uint32_t rest = ((1u << n) - 1) & ~neg;
        // enumerate subsets of the nonnegative part as strictly-positive support
        uint32_t pos = 0;
        while (true) {
            out.push_back({neg, pos});
            if (pos == rest) break;
            pos = (pos - rest) & rest;  // next subset of rest
        }
    }
    return out;
}

std::vector<char> cech_nonzero_profile(const SquarefreeMonomialIdeal& a, const CechModule& M) {
    size_t s = a.gen_masks().size();
    std::vector<char> nz(s + 1, 0);
    for (auto [neg, pos] : cech_strands(a.ring(), M)) {
        std::vector<size_t> h = cech_strand_dims(a, M, neg, pos);
        for (size_t i = 0; i <= s; ++i)
            if (h[i] > 0) nz[i] = 1;
    }
    return nz;
}

bool cech_cohomology_nonzero(const SquarefreeMonomialIdeal& a, const CechModule& M, size_t i) {
    if (i > a.gen_masks().size())
        throw std::invalid_argument("degree above the Cech length");
    return cech_nonzero_profile(a, M)[i] != 0;
}

std::optional<size_t> cohomological_dimension(const SquarefreeMonomialIdeal& a,
                                              const CechModule& M) {
    std::vector<char> nz = cech_nonzero_profile(a, M);
    for (size_t i = nz.size(); i-- > 0;)
        if (nz[i]) return i;
    return std::nullopt;
}

bool grothendieck_bound_check(const SquarefreeMonomialIdeal& a, const CechModule& M) {
    auto cd = cohomological_dimension(a, M);
    if (!cd) return true;
    Ideal ann = M.is_ring() ? Ideal(a.ring(), {}) : M.quotient->to_ideal();
    if (ann.is_unit()) return !cd.has_value();
    return *cd <= krull_dim(ann);
}

MayerVietorisResult mayer_vietoris_clopen_check(
    const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b,
    const std::vector<SquarefreeMonomialIdeal>& corpus) {
    // monomial sum contains 1 only through an empty generator; monomial
    // intersection is zero only against the zero ideal
    bool sum_is_unit = a.is_unit() || b.is_unit();
    bool meet_is_zero = a.is_zero() || b.is_zero();
    if (!sum_is_unit || !meet_is_zero) return MayerVietorisResult::hypothesis_failed;

    std::vector<CechModule> mods = {CechModule::whole_ring()};
    for (const auto& J : corpus) mods.push_back(CechModule::quotient_by(J));
    for (const auto& M : mods) {
        auto cd = cohomological_dimension(a, M);
        if (cd && *cd > 0) return MayerVietorisResult::check_failed;
    }
    return MayerVietorisResult::holds;
}

}  // namespace specfilt
