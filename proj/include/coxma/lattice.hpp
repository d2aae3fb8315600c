#ifndef COXMA_LATTICE_HPP
#define COXMA_LATTICE_HPP

#include <map>
#include <string>
#include <vector>

#include "coxma/arrangement.hpp"
#include "coxma/tpoly.hpp"

namespace coxma {

// A flat of the intersection lattice, represented by the canonical reduced
// row-echelon basis of the span of the normals of the hyperplanes containing
// it. Two flats are equal iff their echelon matrices are equal.
struct Flat {
    std::vector<std::vector<Rational>> normal_space; // rref rows
    int codim() const { return static_cast<int>(normal_space.size()); }

    friend bool operator==(const Flat& a, const Flat& b) {
        return a.normal_space == b.normal_space;
    }
    friend bool operator<(const Flat& a, const Flat& b) {
        return a.normal_space < b.normal_space;
    }
};

// True iff span(a) is contained in span(b): every row of a reduces to zero
// against b's echelon rows.
bool span_contained(const Flat& a, const Flat& b);

// Intersection lattice: flats grouped by codimension, ordered by reverse
// inclusion of subspaces (equivalently containment of normal spans), with
// Moebius values.
class IntersectionLattice {
public:
    int ambient_dim() const { return n_; }
    const std::vector<std::vector<Flat>>& levels() const { return levels_; }
    size_t flat_count() const;

    long long mobius(const Flat& f) const;
    const std::map<Flat, long long>& mobius_map() const { return mobius_; }

    std::string to_json() const;

    friend IntersectionLattice intersection_lattice(const Arrangement& a);

private:
    int n_ = 0;
    std::vector<std::vector<Flat>> levels_; // levels_[k] = flats of codim k, sorted
    std::map<Flat, long long> mobius_;
};

// Builds all distinct spans of subsets of normals, level by level:
// a codim-(k+1) flat is the span of a codim-k flat plus one normal.
IntersectionLattice intersection_lattice(const Arrangement& a);

// The Moebius recursion: mu(V) = 1, mu(X) = -sum_{Y < X} mu(Y).
std::map<Flat, long long> mobius(const IntersectionLattice& lat);

// chi(A, t) = sum_X mu(X) t^{dim X}, dim taken in the ambient dimension.
// Monic of degree ambient_dim.
TPoly char_poly(const Arrangement& a);

} // namespace coxma

#endif
