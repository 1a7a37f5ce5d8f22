#pragma once

/*
 * Exact rational scalar.
 *
 * Thin value type over GMP's mpq_t. Every constructor canonicalizes, so
 * the denominator is always positive and gcd(|num|, den) = 1. There is no
 * conversion from floating point: the only way in is integers, a pair of
 * integers, or a "p/q" string.
 *
 * A NumTraits specialization at the bottom makes Rational usable as an
 * Eigen scalar (dense vectors and matrices of Rational, dot products,
 * fraction-free elimination).
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace moishezon {

class Rational {
public:
    Rational() = default;

    template <std::integral Int>
    Rational(Int n) : m_value(static_cast<long>(n)) {}  // NOLINT: implicit by design of the scalar

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : m_value(n) {}

    /// Parses "p/q" or "p" (optionally signed). Rejects decimals, exponents,
    /// zero denominators and trailing garbage with std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }

    bool is_integer() const { return m_value.get_den() == 1; }
    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Integer value; throws std::domain_error if not integral or out of range.
    std::int64_t to_int64() const;
    double to_double() const { return m_value.get_d(); }

    /// Always "p/q", with q = 1 written out.
    std::string to_string() const;
    /// "p" for integers, "p/q" otherwise.
    std::string to_short_string() const;

    Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
    Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
    Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.m_value = -a.m_value; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.m_value, b.m_value) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_short_string(); }

    const mpq_class& raw() const { return m_value; }

private:
    mpq_class m_value{0};
};

Rational abs(const Rational& r);

/// n! as an exact rational.
Rational factorial(int n);

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace moishezon

namespace Eigen {

template <>
struct NumTraits<moishezon::Rational> : GenericNumTraits<moishezon::Rational> {
    using Real = moishezon::Rational;
    using NonInteger = moishezon::Rational;
    using Nested = moishezon::Rational;
    using Literal = moishezon::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 16
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
