#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "idemsys/errors.hpp"

namespace idemsys {

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator (GMP canonical form). All arithmetic is exact; division by
// zero throws DivisionByZeroError.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    // Accepts "n" or "num/den" with an optional leading '-' on the
    // numerator and a positive decimal denominator. Rejects "3/0".
    static Rational parse(const std::string& text);

    // Canonical text form: "n" for integers, otherwise "num/den".
    std::string str() const;

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// Binomial coefficient C(n, k) as an exact integer; 0 for k < 0 or k > n.
mpz_class binomial(unsigned long n, long k);

}  // namespace idemsys
