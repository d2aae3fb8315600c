#ifndef COXMA_ARRANGEMENT_HPP
#define COXMA_ARRANGEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxma/multipoly.hpp"

namespace coxma {

// A hyperplane through the origin, identified with its normalized defining
// linear form.
using Hyperplane = LinearForm;

// Data of an irreducible Coxeter type attached to a built arrangement.
struct CoxeterSpec {
    char family = 0; // 'A', 'B', 'D'
    int rank = 0;
    int coxeter_number = 0;
    std::vector<int> exponents; // ascending classical exponents

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

// Central arrangement: ordered list of distinct hyperplanes in dimension n.
// The order is part of the data; multiplicities are positional.
struct Arrangement {
    int ambient_dim = 0;
    std::vector<Hyperplane> hyperplanes;
    std::optional<CoxeterSpec> coxeter;

    size_t size() const { return hyperplanes.size(); }
    // Index of a hyperplane (after normalizing the given form), or -1.
    int index_of(const LinearForm& alpha) const;
    bool contains(const LinearForm& alpha) const { return index_of(alpha) >= 0; }
};

// Multiplicity vector aligned with an arrangement's hyperplane order.
struct Multiplicity {
    std::vector<int> values;

    static Multiplicity constant(size_t count, int v) {
        return Multiplicity{std::vector<int>(count, v)};
    }
    // Indicator of a set of hyperplane indices.
    static Multiplicity indicator(size_t count, const std::vector<int>& idx);

    size_t size() const { return values.size(); }
    int operator[](size_t i) const { return values[i]; }
    int& operator[](size_t i) { return values[i]; }
    long long total() const; // |m| = sum of values
    int min() const;
    int max() const;
    bool is_zero_one() const;

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
        return a.values == b.values;
    }
    friend Multiplicity operator+(const Multiplicity& a, int c);
    // Componentwise 2k + m / 2k - m.
    friend Multiplicity operator+(int c, const Multiplicity& a) { return a + c; }
    friend Multiplicity operator-(int c, const Multiplicity& a);
};

// Rational essential realization of an irreducible Coxeter arrangement.
//   A_l (l >= 1): {y_i} and {y_i - y_j, i < j} in l variables, h = l+1
//   B_l (l >= 2): {x_i} and {x_i -+ x_j, i < j}, h = 2l
//   D_l (l >= 4): {x_i -+ x_j, i < j}, h = 2l-2
Arrangement build_coxeter(char family, int rank);

// Q(A, m) = prod alpha_H^{m(H)}.
MultiPoly defining_poly(const Arrangement& a, const Multiplicity& m);

struct LoadedArrangement {
    Arrangement arrangement;
    std::optional<Multiplicity> multiplicity;
};

// JSON file format:
// {"ambient_dim": n,
//  "hyperplanes": [{"form": [c1,...,cn], "multiplicity": k}, ...],
//  "coxeter": {"family": "B", "rank": 2}}           (optional)
// Forms are integer vectors, normalized on load; "multiplicity" is optional
// (default 1); multiplicities are reported only if at least one entry
// carries the key.
LoadedArrangement load_arrangement(const std::string& path);
LoadedArrangement parse_arrangement_json(const std::string& text);
std::string arrangement_to_json(const Arrangement& a,
                                const std::optional<Multiplicity>& m);
void save_arrangement(const std::string& path, const Arrangement& a,
                      const std::optional<Multiplicity>& m);

} // namespace coxma

#endif
