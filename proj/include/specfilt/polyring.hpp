#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specfilt/bigint.hpp"

namespace specfilt {

struct ParseError : std::runtime_error {
    size_t line, col;
    ParseError(size_t line_, size_t col_, const std::string& what_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

/// Internal inconsistency (a cross-check two independent routes disagreed on,
/// or a verdict-store contradiction). Never a user error.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { rationals, prime_field };

struct CoefficientField {
    FieldKind kind = FieldKind::rationals;
    uint32_t characteristic = 0;  // 0 or a prime < 2^31

    static CoefficientField rationals() { return {FieldKind::rationals, 0}; }
    static CoefficientField prime(uint32_t p);
    bool operator==(const CoefficientField& o) const = default;
};

enum class MonomialOrder { lex, grevlex };

/// Exponent vector; length always equals the ring's variable count.
struct Monomial {
    std::vector<uint32_t> e;

    explicit Monomial(size_t n = 0) : e(n, 0) {}
    uint32_t deg() const;
    bool is_one() const;
    bool divides(const Monomial& o) const;
    Monomial mul(const Monomial& o) const;        // overflow-checked
    Monomial div(const Monomial& o) const;        // requires divides
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return e == o.e; }
};

constexpr uint32_t kMaxTotalDegree = 1u << 16;

struct PolyRingData;
class Polynomial;

/// Shared-immutable polynomial ring handle. Ring identity is structural:
/// two handles with equal data behave identically everywhere.
class PolyRing {
public:
    PolyRing() = default;
    PolyRing(std::vector<std::string> vars, CoefficientField field,
             MonomialOrder order = MonomialOrder::grevlex);

    size_t nvars() const;
    const std::vector<std::string>& vars() const;
    const CoefficientField& field() const;
    MonomialOrder order() const;
    size_t elim_block() const;  // leading vars forming the dominant block; 0 = plain order

    std::optional<size_t> var_index(const std::string& name) const;

    /// -1 / 0 / +1 with a < b / equal / a > b in this ring's term order.
    int mono_cmp(const Monomial& a, const Monomial& b) const;

    /// Fresh variables prepended as a dominant elimination block.
    PolyRing extended(const std::vector<std::string>& fresh) const;

    bool same_ring(const PolyRing& o) const;
    bool valid() const { return data_ != nullptr; }

    // coefficient field arithmetic (reduces mod p in positive characteristic)
    Rational cnorm(const Rational& a) const;
    Rational cadd(const Rational& a, const Rational& b) const;
    Rational csub(const Rational& a, const Rational& b) const;
    Rational cmul(const Rational& a, const Rational& b) const;
    Rational cdiv(const Rational& a, const Rational& b) const;
    Rational cneg(const Rational& a) const;

    Polynomial zero() const;
    Polynomial one() const;
    Polynomial constant(const Rational& c) const;
    Polynomial var(size_t i) const;
    Polynomial monomial(const Monomial& m, const Rational& c) const;

    std::string describe() const;  // "QQ[x,y] grevlex"

private:
    std::shared_ptr<const PolyRingData> data_;
    friend struct PolyRingData;
};

struct Term {
    Monomial m;
    Rational c;  // never zero
};

/// Canonical-form multivariate polynomial: terms strictly descending in the
/// ring's order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(PolyRing ring, std::vector<Term> terms);  // normalizes

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Term& leading() const;
    uint32_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial mono_mul(const Monomial& m, const Rational& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;
    size_t hash() const;

private:
    PolyRing ring_;
    std::vector<Term> terms_;
    void normalize();
};

enum class ArithOp { add, sub, mul };

/// Text grammar:
///   expr := ('-')? term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := atom ('^' uint)? ; atom := var | int | '(' expr ')' | int '/' int
Polynomial parse_poly(const std::string& src, const PolyRing& ring);

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Multivariate division remainder: no term of the result is divisible by any
/// divisor's leading monomial, and f - result lies in (divisors). When several
/// leading monomials divide, the earliest divisor in the list is used.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Exact single-divisor division: quotient q with f = q*d, or nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& d);

/// Move a polynomial into an extended/shrunk ring; `shift` is the index of
/// this ring's first variable inside the target. Dropping variables requires
/// their exponents to be zero.
Polynomial map_to_ring(const Polynomial& f, const PolyRing& target, size_t shift);

}  // namespace specfilt
