#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrhart/error.hpp"

namespace ehrhart {

/// Arbitrary-precision integer.
using Int = mpz_class;

/**
 * Exact rational scalar, always stored in lowest terms with positive
 * denominator (zero is 0/1). Equality is therefore structural. All
 * arithmetic is exact; there is no floating-point path anywhere.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}

    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw Error(ErrorKind::DomainError, "Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw Error(ErrorKind::DomainError, "Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    /// Lowest-terms text form: "p/q", or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {} // q already canonical

    mpq_class q_;
};

/// Largest integer not greater than x.
inline Int floor(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

/// Smallest integer not smaller than x.
inline Int ceil(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

/// Fractional part {x} = x - floor(x), always in [0, 1).
inline Rational frac(const Rational& x) {
    return x - Rational(floor(x));
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// x^e for e >= 0.
inline Rational pow(const Rational& x, unsigned long e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
    return Rational(n, d);
}

inline Int pow(const Int& x, unsigned long e) {
    Int n;
    mpz_pow_ui(n.get_mpz_t(), x.get_mpz_t(), e);
    return n;
}

inline Int abs(const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/**
 * Smallest positive rational c such that c/a and c/b are both integers,
 * i.e. the lcm of two positive rationals: lcm(num_a, num_b) / gcd(den_a, den_b).
 */
inline Rational rat_lcm(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw Error(ErrorKind::DomainError, "rat_lcm: arguments must be positive");
    return Rational(lcm(a.num(), b.num()), gcd(a.den(), b.den()));
}

/**
 * Result of "smallest positive rational scale at which a set meets the
 * integer lattice". Free means every positive scale works, so no minimum
 * exists; it is a distinct variant, never a sentinel number.
 */
class ScaleRequirement {
public:
    static ScaleRequirement free() { return ScaleRequirement(std::nullopt); }

    static ScaleRequirement finite(Rational r) {
        if (r.sign() <= 0)
            throw Error(ErrorKind::DomainError, "ScaleRequirement: value must be positive");
        return ScaleRequirement(std::move(r));
    }

    bool is_free() const { return !v_.has_value(); }
    bool is_finite() const { return v_.has_value(); }

    const Rational& value() const {
        if (!v_)
            throw Error(ErrorKind::FreeIndex, "ScaleRequirement: no finite value (free)");
        return *v_;
    }

    std::string str() const { return v_ ? v_->str() : "free"; }

    friend bool operator==(const ScaleRequirement& a, const ScaleRequirement& b) {
        if (a.is_free() || b.is_free()) return a.is_free() == b.is_free();
        return *a.v_ == *b.v_;
    }

private:
    explicit ScaleRequirement(std::optional<Rational> v) : v_(std::move(v)) {}

    std::optional<Rational> v_;
};

/**
 * Smallest positive rational r with r*v integral, or Free for v = 0.
 * Writing v = u/d with u integral and d the lcm of the coordinate
 * denominators, the answer is d / gcd(u): every positive r' with
 * r'*v integral is an integer multiple of it.
 */
inline ScaleRequirement min_scale_point(std::span<const Rational> v) {
    Int d = 1;
    bool all_zero = true;
    for (const Rational& x : v) {
        if (!x.is_zero()) all_zero = false;
        d = lcm(d, x.den());
    }
    if (all_zero)
        return ScaleRequirement::free();
    Int g = 0;
    for (const Rational& x : v) {
        Rational u = x * Rational(d);
        g = gcd(g, u.num());
    }
    return ScaleRequirement::finite(Rational(d, g));
}

inline ScaleRequirement min_scale_point(const std::vector<Rational>& v) {
    return min_scale_point(std::span<const Rational>(v));
}

} // namespace ehrhart
