#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace segdet {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin RAII wrapper over GMP's mpq_t; every constructor and
// every arithmetic result is canonical, so equality is plain mpq_equal.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {  // NOLINT(google-explicit-constructor) - scalars convert freely
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Strict parser for the canonical textual form "p" or "p/q": q > 1,
    // gcd(p,q) = 1, no leading zeros, no "-0". Returns false with a
    // human-usable hint on violation (e.g. "3/6" -> "write 1/2").
    static bool parse(const std::string& text, Rational& out, std::string& hint);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    // Value as long; only valid when is_integer() and in range.
    long to_long() const { return mpz_get_si(mpq_numref(q_)); }

    std::string str() const;
    std::string numerator_str() const;
    std::string denominator_str() const;

    // Numerator and denominator as rationals (denominator is always >= 1).
    Rational num() const {
        Rational r;
        mpq_set_z(r.q_, mpq_numref(q_));
        return r;
    }
    Rational den() const {
        Rational r;
        mpq_set_z(r.q_, mpq_denref(q_));
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational pow(unsigned e) const;

    // gcd of two integer-valued rationals (nonnegative result).
    static Rational gcd(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t q_;
};

}  // namespace segdet
