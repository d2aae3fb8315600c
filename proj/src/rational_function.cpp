#include "coxma/rational_function.hpp"

#include <sstream>

#include "coxma/errors.hpp"

namespace coxma {

void FactoredRationalFunction::normalize_() {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->second < 0) throw internal_error("negative denominator exponent");
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    if (num_.is_zero()) {
        scalar_ = Rational(1);
        num_ = MultiPoly(num_.nvars());
        den_.clear();
        return;
    }
    // Cancel denominator factors dividing the numerator.
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = divide_by_linear(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    Rational c = num_.content();
    scalar_ *= c;
    num_ = c.inverse() * num_;
}

MultiPoly FactoredRationalFunction::expanded_den() const {
    MultiPoly d = MultiPoly::constant(nvars(), Rational(1));
    for (const auto& [alpha, e] : den_) d = d * MultiPoly::from_linear(alpha).pow(e);
    return d;
}

int FactoredRationalFunction::degree() const {
    if (is_zero()) throw internal_error("degree of the zero rational function");
    int dden = 0;
    for (const auto& [alpha, e] : den_) dden += e;
    return num_.total_degree() - dden;
}

FactoredRationalFunction FactoredRationalFunction::operator-() const {
    FactoredRationalFunction r = *this;
    if (!r.is_zero()) r.scalar_ = -r.scalar_;
    return r;
}

FactoredRationalFunction operator+(const FactoredRationalFunction& a,
                                   const FactoredRationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Common denominator: per-form max exponent.
    FactoredRationalFunction::DenMap den = a.den_;
    for (const auto& [alpha, e] : b.den_) {
        auto it = den.find(alpha);
        if (it == den.end())
            den.emplace(alpha, e);
        else
            it->second = std::max(it->second, e);
    }
    MultiPoly na = a.scalar_ * a.num_;
    MultiPoly nb = b.scalar_ * b.num_;
    for (const auto& [alpha, e] : den) {
        int ea = e - a.pole_order(alpha);
        int eb = e - b.pole_order(alpha);
        if (ea > 0) na = na * MultiPoly::from_linear(alpha).pow(ea);
        if (eb > 0) nb = nb * MultiPoly::from_linear(alpha).pow(eb);
    }
    return FactoredRationalFunction(na + nb, den);
}

FactoredRationalFunction operator-(const FactoredRationalFunction& a,
                                   const FactoredRationalFunction& b) {
    return a + (-b);
}

FactoredRationalFunction operator*(const FactoredRationalFunction& a,
                                   const FactoredRationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        return FactoredRationalFunction(std::max(a.nvars(), b.nvars()));
    FactoredRationalFunction::DenMap den = a.den_;
    for (const auto& [alpha, e] : b.den_) den[alpha] += e;
    FactoredRationalFunction r(a.num_ * b.num_, den);
    r.scalar_ *= a.scalar_ * b.scalar_;
    return r;
}

FactoredRationalFunction operator*(const Rational& c, const FactoredRationalFunction& f) {
    if (c.is_zero() || f.is_zero()) return FactoredRationalFunction(f.nvars());
    FactoredRationalFunction r = f;
    r.scalar_ *= c;
    return r;
}

FactoredRationalFunction operator*(const MultiPoly& p, const FactoredRationalFunction& f) {
    return FactoredRationalFunction(p) * f;
}

FactoredRationalFunction FactoredRationalFunction::times_linear_power(const LinearForm& alpha,
                                                                      int k) const {
    if (is_zero()) return *this;
    FactoredRationalFunction r = *this;
    if (k < 0) {
        r.den_[alpha] += -k;
        r.normalize_();
        return r;
    }
    int cancel = std::min(k, r.pole_order(alpha));
    if (cancel > 0) {
        r.den_[alpha] -= cancel;
        if (r.den_[alpha] == 0) r.den_.erase(alpha);
        k -= cancel;
    }
    if (k > 0) {
        r.num_ = r.num_ * MultiPoly::from_linear(alpha).pow(k);
        r.normalize_();
    }
    return r;
}

FactoredRationalFunction FactoredRationalFunction::derivative(int var) const {
    if (is_zero()) return *this;
    // d/dx [ N / prod alpha_i^{e_i} ]
    //   = [ N' * A - N * sum_i e_i c_i * A/alpha_i ] / prod alpha_i^{e_i + 1},
    // A = prod alpha_i, c_i = coefficient of x_var in alpha_i (a constant).
    MultiPoly a = MultiPoly::constant(nvars(), Rational(1));
    for (const auto& [alpha, e] : den_) a = a * MultiPoly::from_linear(alpha);
    MultiPoly top = num_.derivative(var) * a;
    for (const auto& [alpha, e] : den_) {
        long long ci = alpha.coeff(var);
        if (ci == 0) continue;
        MultiPoly ai = MultiPoly::constant(nvars(), Rational(1));
        for (const auto& [beta, eb] : den_) {
            if (beta == alpha) continue;
            ai = ai * MultiPoly::from_linear(beta);
        }
        top -= Rational(e) * Rational(ci) * (num_ * ai);
    }
    DenMap den = den_;
    for (auto& [alpha, e] : den) e += 1;
    FactoredRationalFunction r(top, den);
    r.scalar_ *= scalar_;
    return r;
}

std::string FactoredRationalFunction::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    MultiPoly top = expanded_num();
    if (den_.empty()) return top.str(names);
    if (top.term_count() > 1)
        os << "(" << top.str(names) << ")";
    else
        os << top.str(names);
    os << " / (";
    bool first = true;
    for (const auto& [alpha, e] : den_) {
        if (!first) os << "*";
        first = false;
        MultiPoly ap = MultiPoly::from_linear(alpha);
        if (ap.term_count() > 1 || e > 1)
            os << "(" << ap.str(names) << ")";
        else
            os << ap.str(names);
        if (e > 1) os << "^" << e;
    }
    os << ")";
    return os.str();
}

} // namespace coxma
