#ifndef COXMA_TPOLY_HPP
#define COXMA_TPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxma {

// Univariate polynomial in t with exact integer coefficients, stored
// ascending with no trailing zeros. Used for characteristic polynomials.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

    static TPoly zero() { return TPoly(); }
    static TPoly monomial(int deg, const mpz_class& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                           : mpz_class(0);
    }

    TPoly& operator+=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }
    friend TPoly operator-(const TPoly& a);
    friend TPoly operator-(TPoly a, const TPoly& b) { a += -b; return a; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return a.c_ != b.c_; }

    mpz_class eval(const mpz_class& t) const;

    // p(a + b*t) by Horner composition (b = +-1 in practice).
    TPoly compose_linear(const mpz_class& a, const mpz_class& b) const;

    // Coefficients highest degree first (the CLI serialization).
    std::vector<mpz_class> coeffs_desc() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

} // namespace coxma

#endif
