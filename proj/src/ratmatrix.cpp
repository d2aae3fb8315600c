#include "coxma/ratmatrix.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace coxma {

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> rows; // echelon rows, one per pivot
    std::vector<size_t> pivot_cols;           // strictly increasing
    size_t cols = 0;
};

void strip_content(std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& x : row) x /= g;
    }
}

// Forward elimination over the integers. Row updates are
// row_i <- pivot*row_i - f*row_p followed by a gcd strip, which keeps entries
// small without ever leaving exact arithmetic.
Echelon echelon_form(const RatMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j);
            rows[i][j] = v.num() * (l / v.den());
        }
        strip_content(rows[i]);
    }
    size_t next = 0; // first unprocessed row
    for (size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        // Deterministic pivot: smallest |entry|, lowest row index on ties.
        size_t best = rows.size();
        for (size_t i = next; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (best == rows.size() ||
                mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);
        const std::vector<mpz_class>& p = rows[next];
        for (size_t i = next + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            mpz_class f = rows[i][col];
            for (size_t j = col; j < m.cols(); ++j)
                rows[i][j] = p[col] * rows[i][j] - f * p[j];
            strip_content(rows[i]);
        }
        e.pivot_cols.push_back(col);
        ++next;
    }
    rows.resize(next);
    e.rows = std::move(rows);
    return e;
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = Rational(1);
        // Back-substitution, bottom up. Pivots right of f stay zero.
        for (size_t r = e.pivot_cols.size(); r-- > 0;) {
            size_t pc = e.pivot_cols[r];
            if (pc > f) continue;
            Rational s(0);
            for (size_t c = pc + 1; c < m.cols(); ++c) {
                if (e.rows[r][c] != 0 && !v[c].is_zero())
                    s += Rational(e.rows[r][c]) * v[c];
            }
            v[pc] = -s / Rational(e.rows[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const RatMatrix& m) { return echelon_form(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& in) {
    if (in.empty()) return {};
    const size_t cols = in[0].size();
    RatMatrix m(in.size(), cols);
    for (size_t i = 0; i < in.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = in[i][j];
    Echelon e = echelon_form(m);
    // Normalize pivots to 1 and eliminate above.
    std::vector<std::vector<Rational>> r(e.rows.size(), std::vector<Rational>(cols, Rational(0)));
    for (size_t i = 0; i < e.rows.size(); ++i) {
        Rational inv = Rational(e.rows[i][e.pivot_cols[i]]).inverse();
        for (size_t j = 0; j < cols; ++j) r[i][j] = Rational(e.rows[i][j]) * inv;
    }
    for (size_t i = r.size(); i-- > 0;) {
        for (size_t k = 0; k < i; ++k) {
            Rational f = r[k][e.pivot_cols[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) r[k][j] -= f * r[i][j];
        }
    }
    return r;
}

} // namespace coxma
