#ifndef COXMA_DERMOD_HPP
#define COXMA_DERMOD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxma/arrangement.hpp"
#include "coxma/rational_function.hpp"

namespace coxma {

// Polynomial vector field delta = sum f_i d/dx_i with homogeneous
// coefficients of a common degree (the degree of the derivation).
struct Derivation {
    std::vector<MultiPoly> coeffs;

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    // Common homogeneous degree of the nonzero coefficients, or nullopt for
    // the zero derivation / inhomogeneous data.
    std::optional<int> degree() const;

    // delta(alpha) = sum c_i f_i for a linear form.
    MultiPoly apply(const LinearForm& alpha) const;
    // delta(p) = sum f_i dp/dx_i.
    MultiPoly apply(const MultiPoly& p) const;

    static Derivation euler(int n);   // E = sum x_i d/dx_i
    static Derivation partial(int n, int i);

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_var_names(nvars())); }
};

// Logarithmic 1-form omega = sum g_i dx_i with factored rational coefficients.
struct LogForm1 {
    std::vector<FactoredRationalFunction> coeffs;

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    // Common homogeneous degree (numerator minus denominator degree).
    std::optional<int> degree() const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_var_names(nvars())); }
};

using ExponentSet = std::vector<int>; // sorted multiset of ell entries

// delta(alpha_H) divisible by alpha_H^{m(H)} for every H.
bool in_derivation_module(const Arrangement& a, const Multiplicity& m, const Derivation& d);

// omega in (1/Q) Omega^1 with d(alpha_H) ^ omega pole-free along H for all H.
bool in_form_module(const Arrangement& a, const Multiplicity& m, const LogForm1& w);

// Exact basis of the degree-d graded piece of D(A, m), by linear algebra on
// the coefficients: for each H the divisibility condition becomes vanishing
// of all monomials with alpha_H-exponent < m(H) after a linear change of
// coordinates making alpha_H the first variable.
std::vector<Derivation> derivation_space(const Arrangement& a, const Multiplicity& m, int d);
int derivation_space_dim(const Arrangement& a, const Multiplicity& m, int d);

// Degree-d graded piece of Omega^1(A, m), presented as (1/Q) sum p_i dx_i
// with the p_i homogeneous of degree d + |m|.
std::vector<LogForm1> form_space(const Arrangement& a, const Multiplicity& m, int d);
int form_space_dim(const Arrangement& a, const Multiplicity& m, int d);

enum class ModuleSide { derivation, form };

// Tabulated graded dimensions: derivation side over [0, d_max], form side
// over [-|m|, d_max].
std::map<int, int> hilbert_function(const Arrangement& a, const Multiplicity& m,
                                    ModuleSide side, int d_max);

struct SaitoResult {
    bool ok = false;
    Rational certificate;   // det = certificate * Q   (derivation side)
    MultiPoly det;          // the coefficient determinant
};

// Saito-Ziegler criterion: ell members of D(A, m) whose coefficient
// determinant is a nonzero constant multiple of Q(A, m) form a basis.
SaitoResult saito_check(const Arrangement& a, const Multiplicity& m,
                        const std::vector<Derivation>& thetas);

struct SaitoFormsResult {
    bool ok = false;
    Rational certificate;             // det = certificate / Q
    FactoredRationalFunction det;
};

// Dual-side criterion: det of the coefficient matrix equals c / Q(A, m).
SaitoFormsResult saito_check_forms(const Arrangement& a, const Multiplicity& m,
                                   const std::vector<LogForm1>& omegas);

// Contraction <delta, omega> = sum f_i g_i, normalized.
FactoredRationalFunction pairing(const Derivation& d, const LogForm1& w);

struct DetectOptions {
    std::uint64_t seed = 20021202;
    int max_retries = 8;
};

struct DetectResult {
    bool certified = false;
    ExponentSet exponents;           // valid iff certified
    std::vector<Derivation> basis;   // Saito-certified basis, iff certified
    Rational certificate;            // det = certificate * Q
    std::map<int, int> hilbert;      // graded dimensions actually computed
    std::string diagnostic;          // why certification was not reached
};

// Fits candidate exponents from the graded dimensions (free-pattern greedy
// fit, degrees up to |m|), then certifies them by building random candidate
// bases from the kernels and running saito_check. Uncertified = absent.
DetectResult detect_exponents(const Arrangement& a, const Multiplicity& m,
                              const DetectOptions& opts = {});

} // namespace coxma

#endif
