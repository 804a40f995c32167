#include "idemsys/rational.hpp"

#include <cctype>
#include <ostream>

namespace idemsys {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (sgn(v_.get_den()) == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Grammar: -?[0-9]+(/[0-9]+)?  with a nonzero denominator.
    const auto bad = [&] { return ParseError("malformed rational '" + text + "'"); };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    if (text[0] == '-') pos = 1;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw bad();
    mpz_class num, den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') throw bad();
        const std::string den_part = text.substr(pos + 1);
        if (den_part.empty()) throw bad();
        for (char c : den_part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        }
        den.set_str(den_part, 10);
        if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
        num.set_str(text.substr(0, pos), 10);
    } else {
        num.set_str(text, 10);
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_str();  // canonical "num" or "num/den"
}

Rational Rational::abs() const {
    Rational r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

}  // namespace idemsys
