#include "specfilt/polyring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace specfilt {

CoefficientField CoefficientField::prime(uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    return {FieldKind::prime_field, p};
}

uint32_t Monomial::deg() const {
    uint32_t d = 0;
    for (uint32_t x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    for (uint32_t x : e) if (x) return false;
    return true;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r(e.size());
    uint64_t total = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] = e[i] + o.e[i];
        total += r.e[i];
    }
    if (total > kMaxTotalDegree)
        throw std::overflow_error("monomial degree above the 2^16 cap");
    return r;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        if (o.e[i] > e[i]) throw std::domain_error("monomial division not exact");
        r.e[i] = e[i] - o.e[i];
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

struct PolyRingData {
    std::vector<std::string> vars;
    CoefficientField field;
    MonomialOrder order;
    size_t elim_block = 0;

    bool operator==(const PolyRingData& o) const = default;
};

PolyRing::PolyRing(std::vector<std::string> vars, CoefficientField field, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable " + v);
    }
    auto d = std::make_shared<PolyRingData>();
    d->vars = std::move(vars);
    d->field = field;
    d->order = order;
    data_ = std::move(d);
}

size_t PolyRing::nvars() const { return data_->vars.size(); }
const std::vector<std::string>& PolyRing::vars() const { return data_->vars; }
const CoefficientField& PolyRing::field() const { return data_->field; }
MonomialOrder PolyRing::order() const { return data_->order; }
size_t PolyRing::elim_block() const { return data_->elim_block; }

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < data_->vars.size(); ++i)
        if (data_->vars[i] == name) return i;
    return std::nullopt;
}

namespace {
// compare a[s..e) vs b[s..e) in the base order
int range_cmp(MonomialOrder ord, const Monomial& a, const Monomial& b, size_t s, size_t e) {
    if (ord == MonomialOrder::lex) {
        for (size_t i = s; i < e; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    uint64_t da = 0, db = 0;
    for (size_t i = s; i < e; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = e; i-- > s;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;  // grevlex tie-break
    return 0;
}
}  // namespace

int PolyRing::mono_cmp(const Monomial& a, const Monomial& b) const {
    size_t blk = data_->elim_block;
    if (blk > 0) {
        int c = range_cmp(data_->order, a, b, 0, blk);
        if (c) return c;
        return range_cmp(data_->order, a, b, blk, nvars());
    }
    return range_cmp(data_->order, a, b, 0, nvars());
}

PolyRing PolyRing::extended(const std::vector<std::string>& fresh) const {
    std::vector<std::string> vars = fresh;
    vars.insert(vars.end(), data_->vars.begin(), data_->vars.end());
    PolyRing r(std::move(vars), data_->field, data_->order);
    auto d = std::make_shared<PolyRingData>(*r.data_);
    d->elim_block = fresh.size();
    r.data_ = std::move(d);
    return r;
}

bool PolyRing::same_ring(const PolyRing& o) const {
    if (data_ == o.data_) return true;
    return data_ && o.data_ && *data_ == *o.data_;
}

Rational PolyRing::cnorm(const Rational& a) const {
    if (data_->field.kind == FieldKind::rationals) return a;
    uint32_t p = data_->field.characteristic;
    uint32_t n = a.num().mod_u32(p);
    if (a.num().is_negative() && n) n = p - n;
    uint32_t d = a.den().mod_u32(p);
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    uint64_t v = static_cast<uint64_t>(n) * inverse_mod(d, p) % p;
    return Rational(static_cast<long long>(v));
}

Rational PolyRing::cadd(const Rational& a, const Rational& b) const { return cnorm(a + b); }
Rational PolyRing::csub(const Rational& a, const Rational& b) const { return cnorm(a - b); }
Rational PolyRing::cmul(const Rational& a, const Rational& b) const { return cnorm(a * b); }
Rational PolyRing::cneg(const Rational& a) const { return cnorm(-a); }

Rational PolyRing::cdiv(const Rational& a, const Rational& b) const {
    if (data_->field.kind == FieldKind::rationals) return a / b;
    Rational bn = cnorm(b);
    if (bn.is_zero()) throw std::domain_error("division by zero in F_p");
    uint32_t p = data_->field.characteristic;
    uint32_t inv = inverse_mod(static_cast<uint32_t>(bn.num().to_i64()), p);
    return cmul(a, Rational(static_cast<long long>(inv)));
}

Polynomial PolyRing::zero() const { return Polynomial(*this, {}); }
Polynomial PolyRing::one() const { return constant(Rational(1)); }

Polynomial PolyRing::constant(const Rational& c) const {
    return Polynomial(*this, {{Monomial(nvars()), c}});
}

Polynomial PolyRing::var(size_t i) const {
    Monomial m(nvars());
    m.e[i] = 1;
    return Polynomial(*this, {{m, Rational(1)}});
}

Polynomial PolyRing::monomial(const Monomial& m, const Rational& c) const {
    return Polynomial(*this, {{m, c}});
}

std::string PolyRing::describe() const {
    std::string f = data_->field.kind == FieldKind::rationals
                        ? "QQ"
                        : "F" + std::to_string(data_->field.characteristic);
    std::string v;
    for (size_t i = 0; i < data_->vars.size(); ++i) {
        if (i) v += ",";
        v += data_->vars[i];
    }
    return f + "[" + v + "] " + (data_->order == MonomialOrder::lex ? "lex" : "grevlex");
}

Polynomial::Polynomial(PolyRing ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    for (auto& t : terms_) t.c = ring_.cnorm(t.c);
    std::stable_sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_.mono_cmp(a.m, b.m) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = ring_.cadd(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one();
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_.front();
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("ring mismatch");
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.c = ring_.cneg(t.c);
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("ring mismatch");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({a.m.mul(b.m), a.c * b.c});
    return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.c = ring_.cmul(t.c, c);
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::mono_mul(const Monomial& m, const Rational& c) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.m.mul(m), ring_.cmul(t.c, c)});
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.cdiv(Rational(1), leading().c));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

size_t Polynomial::hash() const {
    size_t h = 1469598103934665603ULL;
    for (const auto& t : terms_) {
        for (uint32_t x : t.m.e) h = h * 1099511628211ULL ^ x;
        h = h * 1099511628211ULL ^ t.c.hash();
    }
    return h;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        bool neg = c.num().is_negative();
        if (first) {
            if (neg) { os << "-"; c = -c; }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        bool printed_coef = false;
        if (!c.is_one() || t.m.is_one()) {
            os << c.to_string();
            printed_coef = true;
        }
        bool first_var = true;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            if (printed_coef || !first_var) os << "*";
            os << ring_.vars()[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::logic_error("unreachable");
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("zero divisor in normal_form");
        if (!d.ring().same_ring(f.ring())) throw std::invalid_argument("ring mismatch");
    }
    const PolyRing& R = f.ring();
    Polynomial work = f;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool reduced = false;
        for (const auto& d : divisors) {
            const Term& dl = d.leading();
            if (dl.m.divides(lt.m)) {
                Rational q = R.cdiv(lt.c, dl.c);
                work = work - d.mono_mul(lt.m.div(dl.m), q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            work = Polynomial(R, std::vector<Term>(work.terms().begin() + 1, work.terms().end()));
        }
    }
    return Polynomial(R, std::move(remainder));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) return std::nullopt;
    const PolyRing& R = f.ring();
    Polynomial work = f;
    std::vector<Term> quotient;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        const Term& dl = d.leading();
        if (!dl.m.divides(lt.m)) return std::nullopt;
        Rational q = R.cdiv(lt.c, dl.c);
        Monomial qm = lt.m.div(dl.m);
        quotient.push_back({qm, q});
        work = work - d.mono_mul(qm, q);
    }
    return Polynomial(R, std::move(quotient));
}

Polynomial map_to_ring(const Polynomial& f, const PolyRing& target, size_t shift) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(target.nvars());
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            size_t j = i + shift;
            if (j >= target.nvars())
                throw std::domain_error("variable does not exist in target ring");
            m.e[j] = t.m.e[i];
        }
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(target, std::move(ts));
}

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0, line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' ||
                                    src[pos] == '\n' || src[pos] == '\r'))
            advance();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    void advance() {
        if (pos < src.size()) {
            if (src[pos] == '\n') { ++line; col = 1; } else ++col;
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }
};

struct PolyParser {
    Lexer lx;
    const PolyRing& ring;

    PolyParser(const std::string& s, const PolyRing& r) : lx(s), ring(r) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (lx.peek() != '\0') lx.fail("trailing input");
        return p;
    }

    Polynomial expr() {
        bool neg = false;
        if (lx.peek() == '-') { lx.advance(); neg = true; }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = lx.peek();
            if (c == '+') { lx.advance(); acc = acc + term(); }
            else if (c == '-') { lx.advance(); acc = acc - term(); }
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lx.peek() == '*') {
            lx.advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lx.peek() == '^') {
            lx.advance();
            if (!isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected exponent");
            uint64_t e = read_uint();
            Polynomial acc = ring.one();
            for (uint64_t i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    uint64_t read_uint() {
        lx.skip_ws();
        uint64_t v = 0;
        size_t n = 0;
        while (lx.pos < lx.src.size() && isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) {
            v = v * 10 + (lx.src[lx.pos] - '0');
            if (v > kMaxTotalDegree && n > 6) lx.fail("integer too large");
            lx.advance();
            ++n;
        }
        if (n == 0) lx.fail("expected integer");
        return v;
    }

    BigInt read_int_big() {
        lx.skip_ws();
        std::string digits;
        while (lx.pos < lx.src.size() && isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) {
            digits += lx.src[lx.pos];
            lx.advance();
        }
        if (digits.empty()) lx.fail("expected integer");
        return BigInt::from_string(digits);
    }

    Polynomial atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            Polynomial p = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.advance();
            return p;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t eline = lx.line, ecol = lx.col;
            BigInt n = read_int_big();
            if (lx.peek() == '/') {
                lx.advance();
                BigInt d = read_int_big();
                if (d.is_zero()) throw ParseError(eline, ecol, "zero denominator");
                if (ring.field().kind == FieldKind::prime_field &&
                    d.mod_u32(ring.field().characteristic) == 0)
                    throw ParseError(eline, ecol,
                                     "rational literal not reducible in characteristic " +
                                         std::to_string(ring.field().characteristic));
                return ring.constant(Rational(n, d));
            }
            return ring.constant(Rational(n, BigInt(1)));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t eline = lx.line, ecol = lx.col;
            std::string name;
            while (lx.pos < lx.src.size() &&
                   (isalnum(static_cast<unsigned char>(lx.src[lx.pos])) || lx.src[lx.pos] == '_')) {
                name += lx.src[lx.pos];
                lx.advance();
            }
            auto idx = ring.var_index(name);
            if (!idx) throw ParseError(eline, ecol, "unknown variable '" + name + "'");
            return ring.var(*idx);
        }
        lx.fail("expected variable, number or '('");
    }
};

}  // namespace

Polynomial parse_poly(const std::string& src, const PolyRing& ring) {
    PolyParser p(src, ring);
    return p.parse();
}

}  // namespace specfilt
