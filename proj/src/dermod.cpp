#include "coxma/dermod.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "coxma/errors.hpp"
#include "coxma/ratmatrix.hpp"

namespace coxma {

bool Derivation::is_zero() const {
    for (const auto& f : coeffs) {
        if (!f.is_zero()) return false;
    }
    return true;
}

std::optional<int> Derivation::degree() const {
    std::optional<int> d;
    for (const auto& f : coeffs) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) return std::nullopt;
        if (!d) d = f.total_degree();
        else if (*d != f.total_degree()) return std::nullopt;
    }
    return d;
}

MultiPoly Derivation::apply(const LinearForm& alpha) const {
    MultiPoly r(nvars());
    for (int i = 0; i < nvars(); ++i) {
        if (alpha.coeff(i) != 0) r += Rational(alpha.coeff(i)) * coeffs[static_cast<size_t>(i)];
    }
    return r;
}

MultiPoly Derivation::apply(const MultiPoly& p) const {
    MultiPoly r(nvars());
    for (int i = 0; i < nvars(); ++i) {
        if (!coeffs[static_cast<size_t>(i)].is_zero())
            r += coeffs[static_cast<size_t>(i)] * p.derivative(i);
    }
    return r;
}

Derivation Derivation::euler(int n) {
    Derivation e;
    for (int i = 0; i < n; ++i) e.coeffs.push_back(MultiPoly::variable(n, i));
    return e;
}

Derivation Derivation::partial(int n, int i) {
    Derivation d;
    for (int j = 0; j < n; ++j)
        d.coeffs.push_back(j == i ? MultiPoly::constant(n, Rational(1)) : MultiPoly(n));
    return d;
}

std::string Derivation::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        const auto& f = coeffs[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str(names) << ")*d/d" << names[static_cast<size_t>(i)];
    }
    return first ? "0" : os.str();
}

bool LogForm1::is_zero() const {
    for (const auto& g : coeffs) {
        if (!g.is_zero()) return false;
    }
    return true;
}

std::optional<int> LogForm1::degree() const {
    std::optional<int> d;
    for (const auto& g : coeffs) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) return std::nullopt;
        if (!d) d = g.degree();
        else if (*d != g.degree()) return std::nullopt;
    }
    return d;
}

std::string LogForm1::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        const auto& g = coeffs[static_cast<size_t>(i)];
        if (g.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << g.str(names) << ")*d" << names[static_cast<size_t>(i)];
    }
    return first ? "0" : os.str();
}

bool in_derivation_module(const Arrangement& a, const Multiplicity& m, const Derivation& d) {
    if (d.nvars() != a.ambient_dim) throw input_error("derivation dimension mismatch");
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        if (m[i] == 0) continue;
        if (!divide_by_linear_power(d.apply(a.hyperplanes[i]), a.hyperplanes[i], m[i]))
            return false;
    }
    return true;
}

bool in_form_module(const Arrangement& a, const Multiplicity& m, const LogForm1& w) {
    if (w.nvars() != a.ambient_dim) throw input_error("form dimension mismatch");
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    const int n = a.ambient_dim;
    // omega must lie in (1/Q) Omega^1: poles only along arrangement forms,
    // bounded by the multiplicity.
    for (const auto& g : w.coeffs) {
        for (const auto& [alpha, e] : g.den()) {
            int idx = a.index_of(alpha);
            if (idx < 0 || e > m[static_cast<size_t>(idx)]) return false;
        }
    }
    // d(alpha_H) ^ omega pole-free along H, componentwise.
    for (size_t hidx = 0; hidx < a.size(); ++hidx) {
        if (m[hidx] == 0) continue;
        const LinearForm& alpha = a.hyperplanes[hidx];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (alpha.coeff(i) == 0 && alpha.coeff(j) == 0) continue;
                FactoredRationalFunction comp =
                    Rational(alpha.coeff(i)) * w.coeffs[static_cast<size_t>(j)] -
                    Rational(alpha.coeff(j)) * w.coeffs[static_cast<size_t>(i)];
                if (comp.pole_order(alpha) > 0) return false;
            }
        }
    }
    return true;
}

namespace {

// Monomials of total degree d in n variables, lexicographically ascending.
void enumerate_monomials(int n, int d, Expo& cur, int pos, std::vector<Expo>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = d;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur[static_cast<size_t>(pos)] = k;
        enumerate_monomials(n, d - k, cur, pos + 1, out);
    }
}

std::vector<Expo> monomials(int n, int d) {
    std::vector<Expo> out;
    Expo cur(static_cast<size_t>(n), 0);
    enumerate_monomials(n, d, cur, 0, out);
    return out;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Change of coordinates attached to a hyperplane: y_0 = alpha(x), the other
// y's are the kept unit coordinates. xsub[i] is (c_pivot * x_i) written in
// the y's; the uniform scale c_pivot^d drops out of the linear conditions.
struct Frame {
    std::vector<MultiPoly> xsub;
};

Frame make_frame(const LinearForm& alpha, int n) {
    Frame fr;
    const int j0 = alpha.pivot();
    const long long cj = alpha.coeff(j0);
    std::vector<int> ypos(static_cast<size_t>(n), -1);
    int next = 1;
    for (int i = 0; i < n; ++i) {
        if (i != j0) ypos[static_cast<size_t>(i)] = next++;
    }
    for (int i = 0; i < n; ++i) {
        MultiPoly p(n);
        if (i == j0) {
            // cj*x_j0 = y_0 - sum_{i' != j0} c_{i'} y_{pos(i')}
            p += MultiPoly::variable(n, 0);
            for (int k = 0; k < n; ++k) {
                if (k == j0 || alpha.coeff(k) == 0) continue;
                p += Rational(-alpha.coeff(k)) *
                     MultiPoly::variable(n, ypos[static_cast<size_t>(k)]);
            }
        } else {
            p = Rational(cj) * MultiPoly::variable(n, ypos[static_cast<size_t>(i)]);
        }
        fr.xsub.push_back(std::move(p));
    }
    return fr;
}

// Expansion of every degree-d monomial x^a in the frame's y coordinates.
std::vector<MultiPoly> expand_monomials(const Frame& fr, const std::vector<Expo>& mons) {
    const int n = static_cast<int>(fr.xsub.size());
    int d = 0;
    if (!mons.empty())
        for (int x : mons[0]) d += x;
    // Power tables xsub[i]^k.
    std::vector<std::vector<MultiPoly>> pw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        pw[static_cast<size_t>(i)].push_back(MultiPoly::constant(n, Rational(1)));
        for (int k = 1; k <= d; ++k)
            pw[static_cast<size_t>(i)].push_back(pw[static_cast<size_t>(i)].back() *
                                                 fr.xsub[static_cast<size_t>(i)]);
    }
    std::vector<MultiPoly> out;
    out.reserve(mons.size());
    for (const Expo& a : mons) {
        MultiPoly p = MultiPoly::constant(n, Rational(1));
        for (int i = 0; i < n; ++i) {
            if (a[static_cast<size_t>(i)] > 0)
                p = p * pw[static_cast<size_t>(i)][static_cast<size_t>(a[static_cast<size_t>(i)])];
        }
        out.push_back(std::move(p));
    }
    return out;
}

struct ConstraintRow {
    std::vector<std::pair<size_t, Rational>> entries; // (column, value)
};

// Rows forcing alpha^mu | p where p = sum_i weight_i * (block i polynomial),
// blocks of size N = #monomials; block i holds the coefficients of the i-th
// unknown polynomial. A "bad" monomial is one whose y_0-exponent is < mu;
// its coefficient in the substituted polynomial must vanish.
void divisibility_rows(const Arrangement& a, size_t hidx, int mu,
                       const std::vector<Expo>& mons,
                       const std::vector<std::pair<int, Rational>>& weights,
                       std::vector<ConstraintRow>& rows) {
    const LinearForm& alpha = a.hyperplanes[hidx];
    Frame fr = make_frame(alpha, a.ambient_dim);
    std::vector<MultiPoly> exp = expand_monomials(fr, mons);
    const size_t nmon = mons.size();
    std::map<Expo, size_t, GradedLexLess> bad;
    for (size_t b = 0; b < nmon; ++b) {
        if (mons[b][0] < mu) bad.emplace(mons[b], bad.size());
    }
    if (bad.empty()) return;
    std::vector<ConstraintRow> local(bad.size());
    for (size_t acol = 0; acol < nmon; ++acol) {
        for (const auto& [e, c] : exp[acol].terms()) {
            auto it = bad.find(e);
            if (it == bad.end()) continue;
            for (const auto& [blk, wt] : weights) {
                local[it->second].entries.emplace_back(
                    static_cast<size_t>(blk) * nmon + acol, wt * c);
            }
        }
    }
    for (auto& row : local) rows.push_back(std::move(row));
}

RatMatrix assemble(const std::vector<ConstraintRow>& rows, size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [j, v] : rows[i].entries) m.at(i, j) += v;
    }
    return m;
}

} // namespace

std::vector<Derivation> derivation_space(const Arrangement& a, const Multiplicity& m, int d) {
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    if (d < 0) return {};
    const int n = a.ambient_dim;
    const std::vector<Expo> mons = monomials(n, d);
    const size_t nmon = mons.size();
    std::vector<ConstraintRow> rows;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] <= 0) continue;
        // delta(alpha_H) = sum_i c_i f_i must be divisible by alpha_H^{m(H)}.
        std::vector<std::pair<int, Rational>> weights;
        for (int i = 0; i < n; ++i) {
            if (a.hyperplanes[h].coeff(i) != 0)
                weights.emplace_back(i, Rational(a.hyperplanes[h].coeff(i)));
        }
        divisibility_rows(a, h, m[h], mons, weights, rows);
    }
    auto kernel = kernel_basis(assemble(rows, static_cast<size_t>(n) * nmon));
    std::vector<Derivation> out;
    for (const auto& v : kernel) {
        Derivation der;
        for (int i = 0; i < n; ++i) {
            MultiPoly f(n);
            for (size_t k = 0; k < nmon; ++k) {
                const Rational& c = v[static_cast<size_t>(i) * nmon + k];
                if (!c.is_zero()) f.add_term(mons[k], c);
            }
            der.coeffs.push_back(std::move(f));
        }
        out.push_back(std::move(der));
    }
    return out;
}

int derivation_space_dim(const Arrangement& a, const Multiplicity& m, int d) {
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    if (d < 0) return 0;
    const int n = a.ambient_dim;
    const std::vector<Expo> mons = monomials(n, d);
    std::vector<ConstraintRow> rows;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] <= 0) continue;
        std::vector<std::pair<int, Rational>> weights;
        for (int i = 0; i < n; ++i) {
            if (a.hyperplanes[h].coeff(i) != 0)
                weights.emplace_back(i, Rational(a.hyperplanes[h].coeff(i)));
        }
        divisibility_rows(a, h, m[h], mons, weights, rows);
    }
    RatMatrix mat = assemble(rows, static_cast<size_t>(n) * mons.size());
    return static_cast<int>(mat.cols() - rank(mat));
}

std::vector<LogForm1> form_space(const Arrangement& a, const Multiplicity& m, int d) {
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    const int n = a.ambient_dim;
    const int big = d + static_cast<int>(m.total());
    if (big < 0) return {};
    const std::vector<Expo> mons = monomials(n, big);
    const size_t nmon = mons.size();
    std::vector<ConstraintRow> rows;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] <= 0) continue;
        const LinearForm& alpha = a.hyperplanes[h];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (alpha.coeff(i) == 0 && alpha.coeff(j) == 0) continue;
                // alpha^{m(H)} must divide c_i p_j - c_j p_i.
                std::vector<std::pair<int, Rational>> weights;
                if (alpha.coeff(i) != 0) weights.emplace_back(j, Rational(alpha.coeff(i)));
                if (alpha.coeff(j) != 0) weights.emplace_back(i, Rational(-alpha.coeff(j)));
                divisibility_rows(a, h, m[h], mons, weights, rows);
            }
        }
    }
    auto kernel = kernel_basis(assemble(rows, static_cast<size_t>(n) * nmon));
    FactoredRationalFunction::DenMap qden;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] > 0) qden[a.hyperplanes[h]] = m[h];
    }
    std::vector<LogForm1> out;
    for (const auto& v : kernel) {
        LogForm1 w;
        for (int i = 0; i < n; ++i) {
            MultiPoly p(n);
            for (size_t k = 0; k < nmon; ++k) {
                const Rational& c = v[static_cast<size_t>(i) * nmon + k];
                if (!c.is_zero()) p.add_term(mons[k], c);
            }
            w.coeffs.emplace_back(p, qden);
        }
        out.push_back(std::move(w));
    }
    return out;
}

int form_space_dim(const Arrangement& a, const Multiplicity& m, int d) {
    if (m.size() != a.size()) throw input_error("multiplicity length mismatch");
    const int n = a.ambient_dim;
    const int big = d + static_cast<int>(m.total());
    if (big < 0) return 0;
    const std::vector<Expo> mons = monomials(n, big);
    std::vector<ConstraintRow> rows;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] <= 0) continue;
        const LinearForm& alpha = a.hyperplanes[h];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (alpha.coeff(i) == 0 && alpha.coeff(j) == 0) continue;
                std::vector<std::pair<int, Rational>> weights;
                if (alpha.coeff(i) != 0) weights.emplace_back(j, Rational(alpha.coeff(i)));
                if (alpha.coeff(j) != 0) weights.emplace_back(i, Rational(-alpha.coeff(j)));
                divisibility_rows(a, h, m[h], mons, weights, rows);
            }
        }
    }
    RatMatrix mat = assemble(rows, static_cast<size_t>(n) * mons.size());
    return static_cast<int>(mat.cols() - rank(mat));
}

std::map<int, int> hilbert_function(const Arrangement& a, const Multiplicity& m,
                                    ModuleSide side, int d_max) {
    std::map<int, int> h;
    if (side == ModuleSide::derivation) {
        for (int d = 0; d <= d_max; ++d) h[d] = derivation_space_dim(a, m, d);
    } else {
        for (int d = -static_cast<int>(m.total()); d <= d_max; ++d)
            h[d] = form_space_dim(a, m, d);
    }
    return h;
}

SaitoResult saito_check(const Arrangement& a, const Multiplicity& m,
                        const std::vector<Derivation>& thetas) {
    SaitoResult res;
    const int n = a.ambient_dim;
    if (static_cast<int>(thetas.size()) != n)
        throw input_error("saito_check needs exactly ambient_dim derivations");
    for (const auto& th : thetas) {
        if (!in_derivation_module(a, m, th)) return res;
    }
    std::vector<std::vector<MultiPoly>> mat;
    for (const auto& th : thetas) mat.push_back(th.coeffs);
    res.det = poly_det(mat);
    if (res.det.is_zero()) return res;
    MultiPoly q = defining_poly(a, m);
    Rational c = res.det.leading_coeff() / q.leading_coeff();
    if (res.det == c * q) {
        res.ok = true;
        res.certificate = c;
    }
    return res;
}

SaitoFormsResult saito_check_forms(const Arrangement& a, const Multiplicity& m,
                                   const std::vector<LogForm1>& omegas) {
    SaitoFormsResult res;
    const int n = a.ambient_dim;
    if (static_cast<int>(omegas.size()) != n)
        throw input_error("saito_check_forms needs exactly ambient_dim forms");
    for (const auto& w : omegas) {
        if (!in_form_module(a, m, w)) return res;
    }
    // Determinant over factored rational functions by first-column minor
    // expansion (ell is small).
    std::function<FactoredRationalFunction(std::vector<size_t>, std::vector<size_t>)> det =
        [&](std::vector<size_t> rs, std::vector<size_t> cs) -> FactoredRationalFunction {
        if (rs.size() == 1) return omegas[rs[0]].coeffs[cs[0]];
        FactoredRationalFunction acc(n);
        int sign = 1;
        for (size_t k = 0; k < rs.size(); ++k) {
            const FactoredRationalFunction& pivot = omegas[rs[k]].coeffs[cs[0]];
            if (!pivot.is_zero()) {
                std::vector<size_t> rs2;
                for (size_t t = 0; t < rs.size(); ++t) {
                    if (t != k) rs2.push_back(rs[t]);
                }
                std::vector<size_t> cs2(cs.begin() + 1, cs.end());
                FactoredRationalFunction term = pivot * det(rs2, cs2);
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        return acc;
    };
    std::vector<size_t> idx(static_cast<size_t>(n));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    res.det = det(idx, idx);
    if (res.det.is_zero()) return res;
    // det must equal c / Q(A, m) exactly.
    FactoredRationalFunction::DenMap qden;
    for (size_t h = 0; h < a.size(); ++h) {
        if (m[h] > 0) qden[a.hyperplanes[h]] = m[h];
    }
    if (!res.det.num().is_constant() || res.det.den() != qden) return res;
    res.ok = true;
    res.certificate = res.det.scalar() * res.det.num().constant_value();
    return res;
}

FactoredRationalFunction pairing(const Derivation& d, const LogForm1& w) {
    if (d.nvars() != w.nvars()) throw input_error("pairing dimension mismatch");
    FactoredRationalFunction acc(d.nvars());
    for (int i = 0; i < d.nvars(); ++i) {
        if (d.coeffs[static_cast<size_t>(i)].is_zero()) continue;
        acc = acc + d.coeffs[static_cast<size_t>(i)] * w.coeffs[static_cast<size_t>(i)];
    }
    return acc;
}

DetectResult detect_exponents(const Arrangement& a, const Multiplicity& m,
                              const DetectOptions& opts) {
    DetectResult res;
    const int n = a.ambient_dim;
    // The free pattern fit presumes an essential arrangement.
    {
        RatMatrix nm(a.size(), static_cast<size_t>(n));
        for (size_t i = 0; i < a.size(); ++i)
            for (int j = 0; j < n; ++j) nm.at(i, static_cast<size_t>(j)) =
                Rational(a.hyperplanes[i].coeff(j));
        if (rank(nm) != static_cast<size_t>(n)) {
            res.diagnostic = "arrangement is not essential (normals do not span)";
            return res;
        }
    }
    const long long total = m.total();
    std::vector<int> fitted;
    bool fit_ok = false;
    for (int d = 0; d <= total; ++d) {
        int dim = derivation_space_dim(a, m, d);
        res.hilbert[d] = dim;
        long long expected = 0;
        for (int e : fitted) expected += binom(d - e + n - 1, n - 1);
        long long deficit = dim - expected;
        if (deficit < 0) {
            res.diagnostic = "graded dimension falls below the free pattern at degree " +
                             std::to_string(d);
            return res;
        }
        for (long long k = 0; k < deficit; ++k) fitted.push_back(d);
        if (static_cast<int>(fitted.size()) > n) {
            res.diagnostic = "more than " + std::to_string(n) +
                             " generators needed by degree " + std::to_string(d);
            return res;
        }
        if (static_cast<int>(fitted.size()) == n) {
            long long sum = 0;
            for (int e : fitted) sum += e;
            if (sum != total) {
                res.diagnostic = "generator degrees sum to " + std::to_string(sum) +
                                 ", not |m| = " + std::to_string(total);
                return res;
            }
            fit_ok = true;
            break;
        }
    }
    if (!fit_ok) {
        res.diagnostic = "no free exponent pattern within degree |m|";
        return res;
    }
    // Certification: random combinations of kernel vectors at the fitted
    // degrees, Saito-checked. Deterministic under the seed.
    std::mt19937_64 rng(opts.seed);
    std::map<int, std::vector<Derivation>> kernels;
    for (int e : fitted) {
        if (!kernels.count(e)) kernels[e] = derivation_space(a, m, e);
    }
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        std::vector<Derivation> cand;
        for (int e : fitted) {
            const auto& ker = kernels[e];
            Derivation c;
            for (int i = 0; i < n; ++i) c.coeffs.emplace_back(n);
            for (const auto& basis_el : ker) {
                // Small deterministic coefficients in [-8, 8].
                long long r = static_cast<long long>(rng() % 17) - 8;
                if (r == 0) continue;
                for (int i = 0; i < n; ++i)
                    c.coeffs[static_cast<size_t>(i)] +=
                        Rational(r) * basis_el.coeffs[static_cast<size_t>(i)];
            }
            cand.push_back(std::move(c));
        }
        SaitoResult sr = saito_check(a, m, cand);
        if (sr.ok) {
            res.certified = true;
            res.exponents = fitted;
            std::sort(res.exponents.begin(), res.exponents.end());
            res.basis = std::move(cand);
            res.certificate = sr.certificate;
            return res;
        }
    }
    res.diagnostic = "saito certification failed after " + std::to_string(opts.max_retries) +
                     " attempts";
    return res;
}

} // namespace coxma
