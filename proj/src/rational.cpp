#include "moishezon/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace moishezon {

namespace {

bool is_signed_digits(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string buf(s);
    if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
    return mpz_class(buf, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_signed_digits(text)) {
            throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
        }
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_signed_digits(num) || !is_digits(den)) {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    const mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    m_value /= o.m_value;
    return *this;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), m_value.get_num_mpz_t(), m_value.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), m_value.get_num_mpz_t(), m_value.get_den_mpz_t());
    return q;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
    const mpz_class& n = m_value.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("integer " + n.get_str() + " out of range");
    return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::to_string() const {
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

std::string Rational::to_short_string() const {
    if (is_integer()) return m_value.get_num().get_str();
    return to_string();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace moishezon
