#ifndef COXMA_RATIONAL_HPP
#define COXMA_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

namespace coxma {

// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
// value canonical at all times: gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}             // NOLINT(google-explicit-constructor)
    Rational(long long n) : v_(static_cast<long>(n)) {} // LP64
    Rational(int n) : v_(n) {}              // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) { canon(); }
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { canon(); }
    explicit Rational(const mpq_class& q) : v_(q) { canon(); }
    // Accepts "p", "-p/q".
    explicit Rational(const std::string& s) : v_(s) { canon(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
    Rational inverse() const { Rational r; r.v_ = 1 / v_; return r; }

    std::string str() const { return v_.get_str(); }
    const mpq_class& mpq() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    void canon() { v_.canonicalize(); }
    mpq_class v_;
};

inline Rational rat_gcd(const Rational& a, const Rational& b) {
    // gcd of rationals: gcd of numerators over lcm of denominators. Used for
    // content extraction so that p / content has coprime integer coefficients.
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(gn, ld);
}

} // namespace coxma

#endif
