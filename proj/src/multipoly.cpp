#include "coxma/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "coxma/errors.hpp"

namespace coxma {

std::vector<std::string> default_var_names(int n) {
    static const char* short_names[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (n <= 4)
            names.emplace_back(short_names[i]);
        else
            names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

std::string LinearForm::str(const std::vector<std::string>& names) const {
    return MultiPoly::from_linear(*this).str(names);
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Expo(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly p(nvars);
    Expo e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::from_linear(const LinearForm& alpha) {
    MultiPoly p(alpha.nvars());
    for (int i = 0; i < alpha.nvars(); ++i) {
        if (alpha.coeff(i) != 0) {
            Expo e(static_cast<size_t>(alpha.nvars()), 0);
            e[static_cast<size_t>(i)] = 1;
            p.add_term(e, Rational(alpha.coeff(i)));
        }
    }
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.rbegin()->first;
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int de = 0;
        for (int x : e) de += x;
        if (d < 0) d = de;
        else if (de != d) return false;
    }
    return true;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw internal_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Expo& MultiPoly::leading_expo() const {
    if (terms_.empty()) throw internal_error("leading_expo of zero polynomial");
    return terms_.rbegin()->first;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.n_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.n_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
    if (c.is_zero()) return MultiPoly(p.n_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly r = constant(n_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Expo d(e);
        d[static_cast<size_t>(var)] -= 1;
        r.add_term(d, Rational(k) * c);
    }
    return r;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    if (leading_coeff().sign() < 0) g = -g;
    return g;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (graded-lex greatest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = false;
        for (int x : e) {
            if (x != 0) has_vars = true;
        }
        if (!has_vars) {
            os << a.str();
            continue;
        }
        bool printed = false;
        if (a != Rational(1)) {
            os << a.str();
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const LinearForm& alpha) {
    if (alpha.is_zero()) throw input_error("division by the zero linear form");
    const int n = p.nvars();
    if (p.is_zero()) return MultiPoly(n);
    const int j = alpha.pivot();
    const Rational cj(alpha.coeff(j));
    // alpha = cj*x_j - beta with beta free of x_j.
    MultiPoly beta(n);
    for (int i = 0; i < n; ++i) {
        if (i == j || alpha.coeff(i) == 0) continue;
        Expo e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        beta.add_term(e, Rational(-alpha.coeff(i)));
    }
    // View p as a polynomial in x_j: p = sum_i p_i x_j^i, p_i in the other
    // variables. Synthetic division from the top degree down.
    int dj = 0;
    for (const auto& [e, c] : p.terms()) dj = std::max(dj, e[static_cast<size_t>(j)]);
    std::vector<MultiPoly> pi(static_cast<size_t>(dj) + 1, MultiPoly(n));
    for (const auto& [e, c] : p.terms()) {
        Expo r(e);
        int k = r[static_cast<size_t>(j)];
        r[static_cast<size_t>(j)] = 0;
        pi[static_cast<size_t>(k)].add_term(r, c);
    }
    if (dj == 0) {
        // No x_j at all: divisible only if p == 0, handled above.
        return std::nullopt;
    }
    std::vector<MultiPoly> qi(static_cast<size_t>(dj), MultiPoly(n));
    const Rational inv = cj.inverse();
    qi[static_cast<size_t>(dj - 1)] = inv * pi[static_cast<size_t>(dj)];
    for (int i = dj - 1; i >= 1; --i) {
        qi[static_cast<size_t>(i - 1)] =
            inv * (pi[static_cast<size_t>(i)] + beta * qi[static_cast<size_t>(i)]);
    }
    MultiPoly rem = pi[0] + beta * qi[0];
    if (!rem.is_zero()) return std::nullopt;
    MultiPoly q(n);
    for (int i = 0; i < dj; ++i) {
        for (const auto& [e, c] : qi[static_cast<size_t>(i)].terms()) {
            Expo f(e);
            f[static_cast<size_t>(j)] += i;
            q.add_term(f, c);
        }
    }
    return q;
}

std::optional<MultiPoly> divide_by_linear_power(const MultiPoly& p, const LinearForm& alpha,
                                                int k) {
    MultiPoly q = p;
    for (int i = 0; i < k; ++i) {
        auto next = divide_by_linear(q, alpha);
        if (!next) return std::nullopt;
        q = std::move(*next);
    }
    return q;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) throw input_error("poly_det of empty matrix");
    for (const auto& row : m) {
        if (row.size() != n) throw input_error("poly_det requires a square matrix");
    }
    const int nv = m[0][0].nvars();
    if (n > 20) throw input_error("poly_det: matrix too large for minor expansion");
    // minors[S] = det of the top popcount(S) rows restricted to column set S.
    std::unordered_map<std::uint32_t, MultiPoly> minors;
    minors.emplace(0u, MultiPoly::constant(nv, Rational(1)));
    std::function<const MultiPoly&(std::uint32_t)> det = [&](std::uint32_t s) -> const MultiPoly& {
        auto it = minors.find(s);
        if (it != minors.end()) return it->second;
        const size_t r = static_cast<size_t>(__builtin_popcount(s)) - 1; // row index
        MultiPoly acc(nv);
        size_t pos = 0; // position of column c within the sorted set s
        for (size_t c = 0; c < n; ++c) {
            if (!(s & (1u << c))) continue;
            const MultiPoly& sub = det(s & ~(1u << c));
            if (!m[r][c].is_zero() && !sub.is_zero()) {
                MultiPoly term = m[r][c] * sub;
                if ((r + pos) % 2 != 0) term = -term;
                acc += term;
            }
            ++pos;
        }
        return minors.emplace(s, std::move(acc)).first->second;
    };
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    return det(full);
}

} // namespace coxma
