#ifndef COXMA_RATMATRIX_HPP
#define COXMA_RATMATRIX_HPP

#include <cstddef>
#include <vector>

#include "coxma/rational.hpp"

namespace coxma {

// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Exact null-space basis. Elimination is fraction-free: rows are scaled to
// integers and reduced with cross-multiplication updates plus per-row content
// stripping, so no rational arithmetic happens until back-substitution.
// Returned vectors are indexed by free column, ascending; count = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

size_t rank(const RatMatrix& m);

// Canonical reduced row-echelon form of the row span (zero rows dropped,
// pivots normalized to 1). Two row sets span the same subspace iff their
// rref matrices are identical.
std::vector<std::vector<Rational>> rref(const std::vector<std::vector<Rational>>& rows);

} // namespace coxma

#endif
