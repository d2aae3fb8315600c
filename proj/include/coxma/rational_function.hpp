#ifndef COXMA_RATIONAL_FUNCTION_HPP
#define COXMA_RATIONAL_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "coxma/multipoly.hpp"

namespace coxma {

// Rational function whose denominator is kept factored as a product of
// normalized linear forms: value = scalar * num / prod alpha^e. Canonical
// form: num has coprime integer coefficients with positive leading
// coefficient, and no denominator form divides num. With this storage the
// pole order along a hyperplane is a map lookup.
class FactoredRationalFunction {
public:
    using DenMap = std::map<LinearForm, int>;

    FactoredRationalFunction() : scalar_(1), num_(0) {}
    explicit FactoredRationalFunction(int nvars)
        : scalar_(1), num_(MultiPoly(nvars)) {}
    explicit FactoredRationalFunction(const MultiPoly& p) : scalar_(1), num_(p) {
        normalize_();
    }
    FactoredRationalFunction(const MultiPoly& num, const DenMap& den)
        : scalar_(1), num_(num), den_(den) {
        normalize_();
    }
    static FactoredRationalFunction constant(int nvars, const Rational& c) {
        return FactoredRationalFunction(MultiPoly::constant(nvars, c));
    }

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    const Rational& scalar() const { return scalar_; }
    const MultiPoly& num() const { return num_; }
    const DenMap& den() const { return den_; }

    // Numerator with the scalar folded back in (rational coefficients).
    MultiPoly expanded_num() const { return scalar_ * num_; }
    MultiPoly expanded_den() const;

    // Exponent of alpha in the reduced denominator; 0 if absent.
    int pole_order(const LinearForm& alpha) const {
        auto it = den_.find(alpha);
        return it == den_.end() ? 0 : it->second;
    }

    // Homogeneous degree (numerator degree minus denominator degree).
    // Requires a homogeneous numerator; the zero function has no degree.
    bool is_homogeneous() const { return num_.is_homogeneous(); }
    int degree() const;

    FactoredRationalFunction operator-() const;
    friend FactoredRationalFunction operator+(const FactoredRationalFunction& a,
                                              const FactoredRationalFunction& b);
    friend FactoredRationalFunction operator-(const FactoredRationalFunction& a,
                                              const FactoredRationalFunction& b);
    friend FactoredRationalFunction operator*(const FactoredRationalFunction& a,
                                              const FactoredRationalFunction& b);
    friend FactoredRationalFunction operator*(const Rational& c,
                                              const FactoredRationalFunction& f);
    friend FactoredRationalFunction operator*(const MultiPoly& p,
                                              const FactoredRationalFunction& f);
    friend bool operator==(const FactoredRationalFunction& a,
                           const FactoredRationalFunction& b) {
        return a.scalar_ == b.scalar_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FactoredRationalFunction& a,
                           const FactoredRationalFunction& b) {
        return !(a == b);
    }

    // Multiply by alpha^k (k may be negative: divides, growing the pole).
    FactoredRationalFunction times_linear_power(const LinearForm& alpha, int k) const;

    // Partial derivative. Stays inside the factored representation because
    // every denominator factor is linear.
    FactoredRationalFunction derivative(int var) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_var_names(nvars())); }

private:
    void normalize_();

    Rational scalar_;
    MultiPoly num_;
    DenMap den_;
};

// Normalization as a standalone operation (the constructor already
// normalizes; this re-normalizes and is idempotent).
inline FactoredRationalFunction rf_normalize(const FactoredRationalFunction& f) {
    return FactoredRationalFunction(f.expanded_num(), f.den());
}

} // namespace coxma

#endif
