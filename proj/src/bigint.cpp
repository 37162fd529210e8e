#include "specfilt/bigint.hpp"

#include <stdexcept>

namespace specfilt {

BigInt::BigInt(long long v) {
    if (v < 0) { neg_ = true; }
    unsigned long long u = neg_ ? 0ULL - static_cast<unsigned long long>(v)
                                : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& sml = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < sml.size() ? sml[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1LL << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int m = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -m : m;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.neg_ = neg_;
    } else {
        int m = cmp_mag(limbs_, o.limbs_);
        if (m == 0) return BigInt();
        if (m > 0) { r.limbs_ = sub_mag(limbs_, o.limbs_); r.neg_ = neg_; }
        else       { r.limbs_ = sub_mag(o.limbs_, limbs_); r.neg_ = o.neg_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry +
                           static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + o.limbs_.size()] += static_cast<uint32_t>(carry);
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

// binary long division on magnitudes
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a.limbs_, b.limbs_) < 0) { q = BigInt(); r = a; return; }

    size_t abits = a.limbs_.size() * 32;
    std::vector<uint32_t> quo((a.limbs_.size()), 0);
    BigInt rem;
    for (size_t i = abits; i-- > 0;) {
        // rem = rem*2 + bit i of |a|
        uint32_t carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        for (size_t w = 0; w < rem.limbs_.size(); ++w) {
            uint32_t nc = rem.limbs_[w] >> 31;
            rem.limbs_[w] = (rem.limbs_[w] << 1) | carry;
            carry = nc;
        }
        if (carry) rem.limbs_.push_back(carry);
        if (cmp_mag(rem.limbs_, b.limbs_) >= 0) {
            rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
            quo[i / 32] |= (1u << (i % 32));
        }
    }
    q.limbs_ = std::move(quo);
    q.neg_ = a.neg_ != b.neg_;
    q.trim();
    rem.neg_ = a.neg_;
    rem.trim();
    r = std::move(rem);
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

uint32_t BigInt::mod_u32(uint32_t m) const {
    uint64_t r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = ((r << 32) | limbs_[i]) % m;
    return static_cast<uint32_t>(r);
}

bool BigInt::fits_i64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t v = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? v <= (1ULL << 63) : v < (1ULL << 63);
}

long long BigInt::to_i64() const {
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt a = abs();
    BigInt billion(1000000000);
    std::vector<uint32_t> chunks;
    while (!a.is_zero()) {
        BigInt q, r;
        divmod(a, billion, q, r);
        chunks.push_back(r.is_zero() ? 0 : static_cast<uint32_t>(r.to_i64()));
        a = std::move(q);
    }
    std::string out = neg_ ? "-" : "";
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string c = std::to_string(chunks[i]);
        out += std::string(9 - c.size(), '0') + c;
    }
    return out;
}

size_t BigInt::hash() const {
    size_t h = neg_ ? 0x9e3779b97f4a7c15ULL : 0;
    for (uint32_t w : limbs_) h = h * 1099511628211ULL ^ w;
    return h;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

int Rational::cmp(const Rational& o) const {
    return (num_ * o.den_).cmp(o.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

size_t Rational::hash() const { return num_.hash() * 31 + den_.hash(); }

uint32_t inverse_mod(uint32_t a, uint32_t p) {
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("inverse_mod: not invertible");
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace specfilt
