#include "specfilt/fpmod.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace specfilt {

ModuleMap::ModuleMap(PolyRing r, size_t rows_, size_t cols_)
    : ring(std::move(r)), rows(rows_), cols(cols_) {
    entries.assign(rows * cols, ring.zero());
}

ModuleMap ModuleMap::identity(const PolyRing& r, size_t n) {
    ModuleMap m(r, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

ModuleMap ModuleMap::hstack(const ModuleMap& a, const ModuleMap& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    ModuleMap m(a.ring, a.rows, a.cols + b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
    }
    return m;
}

ModuleMap ModuleMap::vstack(const ModuleMap& a, const ModuleMap& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    ModuleMap m(a.ring, a.rows + b.rows, a.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
    return m;
}

ModuleMap ModuleMap::block_diag(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap m(a.ring, a.rows + b.rows, a.cols + b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j) m.at(a.rows + i, a.cols + j) = b.at(i, j);
    return m;
}

ModuleMap ModuleMap::compose(const ModuleMap& o) const {
    if (cols != o.rows) throw std::invalid_argument("compose: shape mismatch");
    ModuleMap m(ring, rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < o.cols; ++j) {
            Polynomial s = ring.zero();
            for (size_t k = 0; k < cols; ++k) s = s + at(i, k) * o.at(k, j);
            m.at(i, j) = std::move(s);
        }
    return m;
}

bool ModuleMap::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

bool ModuleMap::operator==(const ModuleMap& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
}

std::string ModuleMap::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < cols; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

int modterm_cmp(const PolyRing& R, const ModTerm& a, const ModTerm& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // lower position dominates
    return R.mono_cmp(a.m, b.m);
}

ModVec modvec_normalize(const PolyRing& R, ModVec v) {
    for (auto& t : v) t.c = R.cnorm(t.c);
    std::stable_sort(v.begin(), v.end(), [&R](const ModTerm& a, const ModTerm& b) {
        return modterm_cmp(R, a, b) > 0;
    });
    ModVec out;
    for (auto& t : v) {
        if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
            out.back().c = R.cadd(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    return out;
}

ModVec modvec_add(const PolyRing& R, const ModVec& a, const ModVec& b) {
    ModVec v = a;
    v.insert(v.end(), b.begin(), b.end());
    return modvec_normalize(R, std::move(v));
}

ModVec modvec_scale(const PolyRing& R, const ModVec& a, const Rational& c) {
    ModVec v = a;
    for (auto& t : v) t.c = R.cmul(t.c, c);
    return modvec_normalize(R, std::move(v));
}

ModVec modvec_mono_mul(const PolyRing& R, const ModVec& a, const Monomial& m, const Rational& c) {
    ModVec v;
    v.reserve(a.size());
    for (const auto& t : a) v.push_back({t.pos, t.m.mul(m), R.cmul(t.c, c)});
    return modvec_normalize(R, std::move(v));
}

ModVec column_as_modvec(const ModuleMap& A, size_t j) {
    ModVec v;
    for (size_t i = 0; i < A.rows; ++i)
        for (const auto& t : A.at(i, j).terms()) v.push_back({i, t.m, t.c});
    return modvec_normalize(A.ring, std::move(v));
}

ModuleMap columns_to_map(const PolyRing& R, size_t rank, const std::vector<ModVec>& cols) {
    ModuleMap m(R, rank, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : cols[j])
            m.at(t.pos, j) = m.at(t.pos, j) + R.monomial(t.m, t.c);
    return m;
}

namespace {

ModVec modvec_nf(const PolyRing& R, ModVec v, const std::vector<ModVec>& basis) {
    ModVec rem;
    ModVec work = modvec_normalize(R, std::move(v));
    while (!work.empty()) {
        const ModTerm& lt = work.front();
        bool reduced = false;
        for (const auto& b : basis) {
            const ModTerm& bl = b.front();
            if (bl.pos == lt.pos && bl.m.divides(lt.m)) {
                Rational q = R.cdiv(lt.c, bl.c);
                work = modvec_add(R, work,
                                  modvec_mono_mul(R, b, lt.m.div(bl.m), R.cneg(q)));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            work.erase(work.begin());
        }
    }
    return rem;
}

ModVec modvec_monic(const PolyRing& R, const ModVec& v) {
    if (v.empty()) return v;
    return modvec_scale(R, v, R.cdiv(Rational(1), v.front().c));
}

struct ModPair {
    size_t i, j;
    Monomial lcm;
    uint32_t deg;
};

struct ModuleBuchberger {
    const PolyRing& R;
    size_t rank;        // full working rank (incl. tag block in tracking mode)
    size_t upper = 0;   // tracking mode: positions below `upper` are the module
    bool track = false;

    std::vector<ModVec> basis;
    std::vector<ModVec> syzygies;  // tag parts, positions already shifted to 0-base
    std::vector<ModPair> pairs;

    ModuleBuchberger(const PolyRing& r, size_t rk) : R(r), rank(rk) {}

    bool pair_before(const ModPair& a, const ModPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = R.mono_cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    void add_pairs(size_t t) {
        const ModTerm& lt = basis[t].front();
        std::vector<ModPair> fresh;
        for (size_t i = 0; i < t; ++i) {
            const ModTerm& li = basis[i].front();
            if (li.pos != lt.pos) continue;
            fresh.push_back({i, t, Monomial::lcm(li.m, lt.m), 0});
        }
        for (auto& p : fresh) p.deg = p.lcm.deg();

        if (!track) {
            std::vector<bool> drop(fresh.size(), false);
            for (size_t a = 0; a < fresh.size(); ++a)
                for (size_t b = 0; b < fresh.size(); ++b) {
                    if (a == b || drop[a] || drop[b]) continue;
                    if (!(fresh[b].lcm == fresh[a].lcm) && fresh[b].lcm.divides(fresh[a].lcm))
                        drop[a] = true;
                }
            for (size_t a = 0; a < fresh.size(); ++a)
                for (size_t b = 0; b < a; ++b) {
                    if (drop[a] || drop[b]) continue;
                    if (fresh[a].lcm == fresh[b].lcm) drop[a] = true;
                }
            if (rank == 1) {  // product criterion is ideal-only
                for (size_t a = 0; a < fresh.size(); ++a) {
                    if (drop[a]) continue;
                    const Monomial& mi = basis[fresh[a].i].front().m;
                    bool cop = true;
                    for (size_t v = 0; v < mi.e.size() && cop; ++v)
                        if (mi.e[v] && lt.m.e[v]) cop = false;
                    if (cop) drop[a] = true;
                }
            }
            std::vector<ModPair> kept;
            for (auto& p : pairs) {
                bool del = basis[p.i].front().pos == lt.pos && lt.m.divides(p.lcm) &&
                           !(Monomial::lcm(basis[p.i].front().m, lt.m) == p.lcm) &&
                           !(Monomial::lcm(basis[p.j].front().m, lt.m) == p.lcm);
                if (!del) kept.push_back(std::move(p));
            }
            pairs = std::move(kept);
            for (size_t a = 0; a < fresh.size(); ++a)
                if (!drop[a]) pairs.push_back(std::move(fresh[a]));
        } else {
            for (auto& p : fresh) pairs.push_back(std::move(p));
        }
    }

    void dispatch(ModVec h) {
        if (h.empty()) return;
        if (track && h.front().pos >= upper) {
            ModVec s;
            for (auto& t : h) s.push_back({t.pos - upper, t.m, t.c});
            syzygies.push_back(modvec_normalize(R, std::move(s)));
            return;
        }
        basis.push_back(modvec_monic(R, h));
        add_pairs(basis.size() - 1);
    }

    void run(const std::vector<ModVec>& gens) {
        for (const auto& g : gens) dispatch(modvec_nf(R, g, basis));
        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs.size(); ++k)
                if (pair_before(pairs[k], pairs[best])) best = k;
            ModPair p = pairs[best];
            pairs.erase(pairs.begin() + best);

            const ModVec& f = basis[p.i];
            const ModVec& g = basis[p.j];
            ModVec s = modvec_add(
                R, modvec_mono_mul(R, f, p.lcm.div(f.front().m), R.cdiv(Rational(1), f.front().c)),
                modvec_mono_mul(R, g, p.lcm.div(g.front().m),
                                R.cneg(R.cdiv(Rational(1), g.front().c))));
            dispatch(modvec_nf(R, std::move(s), basis));
        }
    }

    std::vector<ModVec> reduced() const {
        std::vector<bool> keep(basis.size(), true);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[i] || !keep[j]) continue;
                const ModTerm& li = basis[i].front();
                const ModTerm& lj = basis[j].front();
                if (lj.pos == li.pos && lj.m.divides(li.m) && !(j > i && lj.m == li.m))
                    keep[i] = false;
            }
        std::vector<ModVec> mins;
        for (size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) mins.push_back(basis[i]);
        std::vector<ModVec> out;
        for (size_t i = 0; i < mins.size(); ++i) {
            std::vector<ModVec> others;
            for (size_t j = 0; j < mins.size(); ++j)
                if (j != i) others.push_back(mins[j]);
            out.push_back(modvec_monic(R, modvec_nf(R, mins[i], others)));
        }
        std::sort(out.begin(), out.end(), [this](const ModVec& a, const ModVec& b) {
            return modterm_cmp(R, a.front(), b.front()) > 0;
        });
        return out;
    }
};

}  // namespace

ModuleGB::ModuleGB(PolyRing ring, size_t rank, std::vector<ModVec> gens)
    : ring_(std::move(ring)), rank_(rank) {
    ModuleBuchberger mb(ring_, rank);
    std::vector<ModVec> clean;
    for (auto& g : gens) {
        ModVec v = modvec_normalize(ring_, std::move(g));
        if (!v.empty()) clean.push_back(std::move(v));
    }
    mb.run(clean);
    basis_ = mb.reduced();
}

ModuleGB ModuleGB::of_columns(const ModuleMap& A) {
    std::vector<ModVec> cols;
    for (size_t j = 0; j < A.cols; ++j) cols.push_back(column_as_modvec(A, j));
    return ModuleGB(A.ring, A.rows, std::move(cols));
}

ModVec ModuleGB::normal_form(ModVec v) const {
    return modvec_nf(ring_, std::move(v), basis_);
}

bool ModuleGB::contains(const ModVec& v) const { return normal_form(v).empty(); }

bool ModuleGB::contains_column(const ModuleMap& A, size_t j) const {
    return contains(column_as_modvec(A, j));
}

ModuleMap syzygy(const ModuleMap& A) {
    const PolyRing& R = A.ring;
    if (A.rows == 0) return ModuleMap::identity(R, A.cols);
    if (A.cols == 0) return ModuleMap(R, 0, 0);

    ModuleBuchberger mb(R, A.rows + A.cols);
    mb.track = true;
    mb.upper = A.rows;
    std::vector<ModVec> gens;
    for (size_t j = 0; j < A.cols; ++j) {
        ModVec v = column_as_modvec(A, j);
        v.push_back({A.rows + j, Monomial(R.nvars()), Rational(1)});
        gens.push_back(modvec_normalize(R, std::move(v)));
    }
    mb.run(gens);

    // canonicalize the collected generators of ker(A)
    ModuleGB ker(R, A.cols, mb.syzygies);
    return columns_to_map(R, A.cols, ker.basis());
}

struct FPModule::Data {
    ModuleMap pres;
    std::mutex mu;
    std::unique_ptr<ModuleGB> gb;
    std::unique_ptr<bool> zero;
    std::vector<ModuleMap> res;  // A_1.. computed so far
};

FPModule::FPModule(ModuleMap presentation) : data_(std::make_shared<Data>()) {
    data_->pres = std::move(presentation);
}

FPModule FPModule::free_module(const PolyRing& R, size_t rank) {
    return FPModule(ModuleMap(R, rank, 0));
}

FPModule FPModule::quotient_ring(const Ideal& I) {
    ModuleMap m(I.ring(), 1, I.gens().size());
    for (size_t j = 0; j < I.gens().size(); ++j) m.at(0, j) = I.gens()[j];
    return FPModule(std::move(m));
}

const PolyRing& FPModule::ring() const { return data_->pres.ring; }
const ModuleMap& FPModule::presentation() const { return data_->pres; }
const void* FPModule::key() const { return data_.get(); }

const ModuleGB& FPModule::relations_gb() const {
    std::lock_guard<std::mutex> lk(data_->mu);
    if (!data_->gb)
        data_->gb = std::make_unique<ModuleGB>(ModuleGB::of_columns(data_->pres));
    return *data_->gb;
}

bool FPModule::is_zero() const {
    {
        std::lock_guard<std::mutex> lk(data_->mu);
        if (data_->zero) return *data_->zero;
    }
    bool z = true;
    if (data_->pres.rows > 0) {
        const ModuleGB& gb = relations_gb();
        for (size_t i = 0; i < data_->pres.rows && z; ++i) {
            ModVec e{{i, Monomial(ring().nvars()), Rational(1)}};
            if (!gb.contains(e)) z = false;
        }
    }
    std::lock_guard<std::mutex> lk(data_->mu);
    if (!data_->zero) data_->zero = std::make_unique<bool>(z);
    return *data_->zero;
}

std::vector<ModuleMap> FPModule::free_resolution(size_t length, size_t bound) const {
    if (length > bound) throw std::invalid_argument("resolution length above bound");
    std::lock_guard<std::mutex> lk(data_->mu);
    if (data_->res.empty() && length > 0) data_->res.push_back(data_->pres);
    while (data_->res.size() < length) data_->res.push_back(syzygy(data_->res.back()));
    return std::vector<ModuleMap>(data_->res.begin(), data_->res.begin() + length);
}

ModuleMap trim_presentation(ModuleMap A) {
    const PolyRing& R = A.ring;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < A.rows && !changed; ++i)
            for (size_t j = 0; j < A.cols && !changed; ++j) {
                const Polynomial& p = A.at(i, j);
                if (p.is_zero() || !p.is_constant()) continue;
                Rational u = p.leading().c;
                // clear row i via column ops, then column j via row ops
                for (size_t k = 0; k < A.cols; ++k) {
                    if (k == j || A.at(i, k).is_zero()) continue;
                    Polynomial f = A.at(i, k).scaled(R.cdiv(Rational(1), u));
                    for (size_t l = 0; l < A.rows; ++l)
                        A.at(l, k) = A.at(l, k) - f * A.at(l, j);
                }
                for (size_t l = 0; l < A.rows; ++l) {
                    if (l == i || A.at(l, j).is_zero()) continue;
                    Polynomial f = A.at(l, j).scaled(R.cdiv(Rational(1), u));
                    for (size_t k = 0; k < A.cols; ++k)
                        A.at(l, k) = A.at(l, k) - f * A.at(i, k);
                }
                ModuleMap B(R, A.rows - 1, A.cols - 1);
                for (size_t l = 0, bl = 0; l < A.rows; ++l) {
                    if (l == i) continue;
                    for (size_t k = 0, bk = 0; k < A.cols; ++k) {
                        if (k == j) continue;
                        B.at(bl, bk) = A.at(l, k);
                        ++bk;
                    }
                    ++bl;
                }
                A = std::move(B);
                changed = true;
            }
    }
    // drop zero columns
    std::vector<size_t> keep;
    for (size_t j = 0; j < A.cols; ++j) {
        bool z = true;
        for (size_t i = 0; i < A.rows && z; ++i)
            if (!A.at(i, j).is_zero()) z = false;
        if (!z) keep.push_back(j);
    }
    if (keep.size() != A.cols) {
        ModuleMap B(A.ring, A.rows, keep.size());
        for (size_t i = 0; i < A.rows; ++i)
            for (size_t j = 0; j < keep.size(); ++j) B.at(i, j) = A.at(i, keep[j]);
        A = std::move(B);
    }
    return A;
}

namespace {

Polynomial minor_det(const ModuleMap& A, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
    const PolyRing& R = A.ring;
    size_t n = rows.size();
    if (n == 0) return R.one();
    if (n == 1) return A.at(rows[0], cols[0]);
    Polynomial det = R.zero();
    std::vector<size_t> sub(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < n; ++k) {
        const Polynomial& a = A.at(rows[0], cols[k]);
        if (a.is_zero()) continue;
        std::vector<size_t> rc;
        for (size_t t = 0; t < n; ++t)
            if (t != k) rc.push_back(cols[t]);
        Polynomial m = a * minor_det(A, sub, rc);
        det = (k % 2 == 0) ? det + m : det - m;
    }
    return det;
}

}  // namespace

Ideal fitting_ideal_0(const FPModule& M) {
    ModuleMap A = trim_presentation(M.presentation());
    const PolyRing& R = M.ring();
    size_t r = A.rows, c = A.cols;
    if (r == 0) return Ideal(R, {R.one()});
    if (c < r) return Ideal(R, {});
    std::vector<Polynomial> minors;
    std::vector<size_t> rows(r);
    for (size_t i = 0; i < r; ++i) rows[i] = i;
    std::vector<size_t> pick(r);
    for (size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        minors.push_back(minor_det(A, rows, pick));
        // next r-combination of {0..c-1}
        size_t i = r;
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] < c - (r - i)) {
                ++pick[i];
                for (size_t t = i + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return Ideal(R, std::move(minors));
}

FPModule base_change(const FPModule& M, const Ideal& I) {
    const PolyRing& R = M.ring();
    if (!R.same_ring(I.ring())) throw std::invalid_argument("ring mismatch");
    size_t r = M.gens();
    ModuleMap extra(R, r, r * I.gens().size());
    for (size_t g = 0; g < I.gens().size(); ++g)
        for (size_t i = 0; i < r; ++i) extra.at(i, g * r + i) = I.gens()[g];
    return FPModule(ModuleMap::hstack(M.presentation(), extra));
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
    if (!M.ring().same_ring(N.ring())) throw std::invalid_argument("ring mismatch");
    return FPModule(ModuleMap::block_diag(M.presentation(), N.presentation()));
}

ModuleMap kernel_preimage(const ModuleMap& V, const ModuleMap& D) {
    const PolyRing& R = V.ring;
    if (V.rows == 0) return ModuleMap::identity(R, V.cols);
    ModuleMap S = syzygy(ModuleMap::hstack(V, D));
    ModuleMap K(R, V.cols, S.cols);
    for (size_t i = 0; i < V.cols; ++i)
        for (size_t j = 0; j < S.cols; ++j) K.at(i, j) = S.at(i, j);
    // drop columns that are identically zero in the upper part
    std::vector<size_t> keep;
    for (size_t j = 0; j < K.cols; ++j) {
        bool z = true;
        for (size_t i = 0; i < K.rows && z; ++i)
            if (!K.at(i, j).is_zero()) z = false;
        if (!z) keep.push_back(j);
    }
    ModuleMap out(R, V.cols, keep.size());
    for (size_t i = 0; i < V.cols; ++i)
        for (size_t j = 0; j < keep.size(); ++j) out.at(i, j) = K.at(i, keep[j]);
    return out;
}

FPModule presented_subquotient(const ModuleMap& G, const ModuleMap& D) {
    const PolyRing& R = G.ring;
    ModuleMap S = syzygy(ModuleMap::hstack(G, D));
    ModuleMap rel(R, G.cols, S.cols);
    for (size_t i = 0; i < G.cols; ++i)
        for (size_t j = 0; j < S.cols; ++j) rel.at(i, j) = S.at(i, j);
    return FPModule(trim_presentation(std::move(rel)));
}

}  // namespace specfilt
