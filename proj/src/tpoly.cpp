#include "coxma/tpoly.hpp"

#include <sstream>

namespace coxma {

TPoly TPoly::monomial(int deg, const mpz_class& coeff) {
    std::vector<mpz_class> c(static_cast<size_t>(deg) + 1, mpz_class(0));
    c.back() = coeff;
    return TPoly(std::move(c));
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly operator-(const TPoly& a) {
    TPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return TPoly(std::move(c));
}

mpz_class TPoly::eval(const mpz_class& t) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

TPoly TPoly::compose_linear(const mpz_class& a, const mpz_class& b) const {
    TPoly lin(std::vector<mpz_class>{a, b});
    TPoly r;
    for (size_t i = c_.size(); i-- > 0;) {
        r = r * lin;
        r += TPoly(std::vector<mpz_class>{c_[i]});
    }
    return r;
}

std::vector<mpz_class> TPoly::coeffs_desc() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    if (r.empty()) r.emplace_back(0);
    return r;
}

std::string TPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace coxma
