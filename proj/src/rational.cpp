#include "segdet/rational.hpp"

#include <cctype>
#include <ostream>

#include "segdet/error.hpp"

namespace segdet {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("zero_denominator", "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division_by_zero", "rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::pow(unsigned e) const {
    Rational base = *this;
    Rational acc = 1;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer())
        throw DomainError("non_integer", "gcd requires integer values");
    Rational r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
}

static std::string mpz_to_string(const mpz_t z) {
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

std::string Rational::numerator_str() const { return mpz_to_string(mpq_numref(q_)); }
std::string Rational::denominator_str() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::str() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Digits with no leading zero (a bare "0" is allowed).
static bool valid_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return s.size() == 1 || s[0] != '0';
}

bool Rational::parse(const std::string& text, Rational& out, std::string& hint) {
    std::string body = text;
    bool neg = false;
    if (!body.empty() && body[0] == '-') {
        neg = true;
        body = body.substr(1);
    }
    std::string num = body, den;
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!valid_digits(num) || (slash != std::string::npos && !valid_digits(den))) {
        hint = "expected an integer 'p' or fraction 'p/q' in lowest terms";
        return false;
    }
    if (neg && num == "0") {
        hint = "write 0 without a sign";
        return false;
    }
    mpq_t q;
    mpq_init(q);
    mpz_set_str(mpq_numref(q), num.c_str(), 10);
    if (slash == std::string::npos) {
        mpz_set_ui(mpq_denref(q), 1);
    } else {
        mpz_set_str(mpq_denref(q), den.c_str(), 10);
    }
    if (neg) mpz_neg(mpq_numref(q), mpq_numref(q));

    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        hint = "denominator must be nonzero";
        return false;
    }
    mpq_t canon;
    mpq_init(canon);
    mpq_set(canon, q);
    mpq_canonicalize(canon);
    const bool already_canonical =
        mpz_cmp(mpq_numref(q), mpq_numref(canon)) == 0 && mpz_cmp(mpq_denref(q), mpq_denref(canon)) == 0 &&
        (slash == std::string::npos || mpz_cmp_ui(mpq_denref(q), 1) != 0);
    if (!already_canonical) {
        Rational canonical;
        mpq_set(canonical.q_, canon);
        hint = "not in lowest terms; write '" + canonical.str() + "'";
        mpq_clear(q);
        mpq_clear(canon);
        return false;
    }
    mpq_set(out.q_, canon);
    mpq_clear(q);
    mpq_clear(canon);
    return true;
}

}  // namespace segdet
