// rational.hpp : exact scalar types used everywhere in the library.
//
// All geometry and all invariants are computed over arbitrary-precision
// rationals (GMP-backed). No floating point enters the core; doubles appear
// only in oracle error columns of reports.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace lct {

using rational = boost::multiprecision::mpq_rational;
using integer = boost::multiprecision::mpz_int;

// Thrown when an input violates a documented precondition (zero generator,
// dimension mismatch, non-integer ideal exponent, ...).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an operation is asked for outside its supported range
// (exact volume for n > 4, oracle for n > 3, unbounded complement).
struct unsupported_instance : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a certified comparison contradicts one of the inequalities or
// equality characterizations the library promises to uphold. Reaching this
// is a defect, never a normal outcome.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline integer numerator(const rational& q) { return boost::multiprecision::numerator(q); }
inline integer denominator(const rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const rational& q) { return denominator(q) == 1; }

// q^k for k >= 0.
inline rational pow(const rational& q, unsigned k) {
    rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
}

inline integer pow(const integer& z, unsigned k) {
    integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= z;
    return r;
}

inline integer factorial(unsigned n) {
    integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

// Parses "p", "-p" or "p/q" with q > 0. Used for weight coefficients and
// report round-trips; rejects anything else.
inline rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(text));
        const integer p(text.substr(0, slash));
        const integer q(text.substr(slash + 1));
        if (q <= 0) throw invalid_input("rational literal with nonpositive denominator: " + text);
        return rational(p, q);
    } catch (const std::runtime_error&) {
        throw invalid_input("malformed rational literal: " + text);
    }
}

// Canonical "p" / "p/q" rendering (denominator printed only when != 1).
inline std::string to_pq_string(const rational& q) {
    std::string s = numerator(q).str();
    if (!is_integral(q)) s += "/" + denominator(q).str();
    return s;
}

}  // namespace lct
