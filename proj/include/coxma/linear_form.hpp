#ifndef COXMA_LINEAR_FORM_HPP
#define COXMA_LINEAR_FORM_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "coxma/errors.hpp"

namespace coxma {

// Integer linear form c_1 x_1 + ... + c_n x_n, stored normalized:
// gcd of the entries is 1 and the first nonzero entry is positive.
// Normalized forms are canonical representatives of hyperplanes.
class LinearForm {
public:
    LinearForm() = default;

    explicit LinearForm(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    int nvars() const { return static_cast<int>(c_.size()); }
    long long coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const {
        for (long long x : c_) {
            if (x != 0) return false;
        }
        return true;
    }

    // Index of the first nonzero coefficient (the pivot variable).
    int pivot() const {
        for (int i = 0; i < nvars(); ++i) {
            if (c_[static_cast<size_t>(i)] != 0) return i;
        }
        throw internal_error("LinearForm::pivot on zero form");
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return a.c_ != b.c_; }
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.c_ < b.c_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize() {
        if (is_zero()) return;
        long long g = 0;
        for (long long x : c_) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1) {
            for (long long& x : c_) x /= g;
        }
        if (c_[static_cast<size_t>(pivot())] < 0) {
            for (long long& x : c_) x = -x;
        }
    }

    std::vector<long long> c_;
};

// Default display names: x,y,z,w for n <= 4, x1..xn otherwise.
std::vector<std::string> default_var_names(int n);

} // namespace coxma

#endif
