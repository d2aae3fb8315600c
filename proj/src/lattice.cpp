#include "coxma/lattice.hpp"

#include <set>

#include <json.hpp>

#include "coxma/errors.hpp"
#include "coxma/ratmatrix.hpp"

namespace coxma {

bool span_contained(const Flat& a, const Flat& b) {
    if (a.codim() > b.codim()) return false;
    for (const auto& row : a.normal_space) {
        std::vector<Rational> v = row;
        // Reduce v against b's echelon rows.
        for (const auto& brow : b.normal_space) {
            size_t p = 0;
            while (p < brow.size() && brow[p].is_zero()) ++p;
            if (p == brow.size()) continue;
            if (v[p].is_zero()) continue;
            Rational f = v[p]; // brow[p] == 1 in rref
            for (size_t j = p; j < v.size(); ++j) v[j] -= f * brow[j];
        }
        for (const auto& x : v) {
            if (!x.is_zero()) return false;
        }
    }
    return true;
}

size_t IntersectionLattice::flat_count() const {
    size_t c = 0;
    for (const auto& lv : levels_) c += lv.size();
    return c;
}

long long IntersectionLattice::mobius(const Flat& f) const {
    auto it = mobius_.find(f);
    if (it == mobius_.end()) throw internal_error("mobius of unknown flat");
    return it->second;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
    IntersectionLattice lat;
    lat.n_ = a.ambient_dim;
    std::vector<std::vector<Rational>> normals;
    for (const auto& h : a.hyperplanes) {
        std::vector<Rational> row;
        for (int i = 0; i < a.ambient_dim; ++i) row.emplace_back(h.coeff(i));
        normals.push_back(std::move(row));
    }
    Flat bottom; // codim 0: the whole space V
    lat.levels_.push_back({bottom});
    while (true) {
        const auto& prev = lat.levels_.back();
        std::set<Flat> next;
        for (const Flat& f : prev) {
            for (const auto& nr : normals) {
                std::vector<std::vector<Rational>> rows = f.normal_space;
                rows.push_back(nr);
                Flat g{rref(rows)};
                if (g.codim() == f.codim() + 1) next.insert(std::move(g));
            }
        }
        if (next.empty()) break;
        lat.levels_.emplace_back(next.begin(), next.end());
    }
    // Moebius values level by level; every proper lower flat contributes.
    for (const auto& lv : lat.levels_) {
        for (const Flat& x : lv) {
            long long mu = 0;
            if (x.codim() == 0) {
                mu = 1;
            } else {
                for (const auto& lower : lat.levels_) {
                    if (lower.empty() || lower[0].codim() >= x.codim()) break;
                    for (const Flat& y : lower) {
                        if (span_contained(y, x)) mu -= lat.mobius_.at(y);
                    }
                }
            }
            lat.mobius_.emplace(x, mu);
        }
    }
    return lat;
}

std::map<Flat, long long> mobius(const IntersectionLattice& lat) { return lat.mobius_map(); }

TPoly char_poly(const Arrangement& a) {
    IntersectionLattice lat = intersection_lattice(a);
    TPoly chi;
    for (const auto& lv : lat.levels()) {
        for (const Flat& f : lv) {
            chi += TPoly::monomial(a.ambient_dim - f.codim(),
                                   mpz_class(static_cast<long>(lat.mobius(f))));
        }
    }
    return chi;
}

std::string IntersectionLattice::to_json() const {
    nlohmann::json j;
    j["ambient_dim"] = n_;
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lv : levels_) {
        nlohmann::json jl = nlohmann::json::array();
        for (const Flat& f : lv) {
            nlohmann::json jf;
            // Echelon rows scaled to primitive integer vectors.
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : f.normal_space) {
                mpz_class l = 1;
                for (const auto& x : row)
                    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
                mpz_class g = 0;
                for (const auto& x : row) {
                    mpz_class v = x.num() * (l / x.den());
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                }
                if (g == 0) g = 1;
                nlohmann::json r = nlohmann::json::array();
                for (const auto& x : row) {
                    mpz_class v = x.num() * (l / x.den()) / g;
                    r.push_back(v.get_si());
                }
                rows.push_back(r);
            }
            jf["normals"] = rows;
            jf["codim"] = f.codim();
            jf["mobius"] = mobius(f);
            jl.push_back(jf);
        }
        levels.push_back(jl);
    }
    j["levels"] = levels;
    return j.dump(2);
}

} // namespace coxma
