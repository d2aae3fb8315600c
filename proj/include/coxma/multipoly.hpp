#ifndef COXMA_MULTIPOLY_HPP
#define COXMA_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxma/linear_form.hpp"
#include "coxma/rational.hpp"

namespace coxma {

// Exponent vector of a monomial; length = number of variables.
using Expo = std::vector<int>;

// Graded lexicographic order: compare total degree first, then the exponent
// vectors lexicographically. The map below iterates ascending, so the leading
// (greatest) term sits at rbegin().
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

// Multivariate polynomial over the rationals with a canonical term order.
// No zero coefficients are ever stored, so operator== is structural equality.
class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, GradedLexLess>;

    MultiPoly() : n_(0) {}
    explicit MultiPoly(int nvars) : n_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int i);
    // The linear polynomial c_1 x_1 + ... + c_n x_n.
    static MultiPoly from_linear(const LinearForm& alpha);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    const Rational& leading_coeff() const; // graded-lex greatest term
    const Expo& leading_expo() const;

    void add_term(const Expo& e, const Rational& c);
    Rational coeff(const Expo& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, MultiPoly p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int k) const;
    MultiPoly derivative(int var) const;

    // Content: the rational c such that p/c has coprime integer coefficients
    // and positive leading coefficient. Zero polynomial has content 0.
    Rational content() const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_var_names(n_)); }

private:
    int n_;
    TermMap terms_;
};

// Quotient of an exact division p = alpha * q, or nullopt if alpha does not
// divide p. alpha must be a nonzero linear form.
std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const LinearForm& alpha);

// Quotient of p = alpha^k * q, or nullopt. k >= 0 (k = 0 returns p).
std::optional<MultiPoly> divide_by_linear_power(const MultiPoly& p, const LinearForm& alpha,
                                                int k);

// Exact determinant of a square matrix of polynomials, by minor expansion
// with memoization on column subsets.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

} // namespace coxma

#endif
