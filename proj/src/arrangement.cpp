#include "coxma/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "coxma/errors.hpp"

namespace coxma {

int Arrangement::index_of(const LinearForm& alpha) const {
    for (size_t i = 0; i < hyperplanes.size(); ++i) {
        if (hyperplanes[i] == alpha) return static_cast<int>(i);
    }
    return -1;
}

Multiplicity Multiplicity::indicator(size_t count, const std::vector<int>& idx) {
    Multiplicity m = constant(count, 0);
    for (int i : idx) m.values[static_cast<size_t>(i)] = 1;
    return m;
}

long long Multiplicity::total() const {
    long long s = 0;
    for (int v : values) s += v;
    return s;
}

int Multiplicity::min() const {
    return values.empty() ? 0 : *std::min_element(values.begin(), values.end());
}

int Multiplicity::max() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

bool Multiplicity::is_zero_one() const {
    for (int v : values) {
        if (v != 0 && v != 1) return false;
    }
    return true;
}

Multiplicity operator+(const Multiplicity& a, int c) {
    Multiplicity r = a;
    for (int& v : r.values) v += c;
    return r;
}

Multiplicity operator-(int c, const Multiplicity& a) {
    Multiplicity r = a;
    for (int& v : r.values) v = c - v;
    return r;
}

namespace {

LinearForm unit_form(int n, int i) {
    std::vector<long long> c(static_cast<size_t>(n), 0);
    c[static_cast<size_t>(i)] = 1;
    return LinearForm(std::move(c));
}

LinearForm pair_form(int n, int i, int j, long long sj) {
    std::vector<long long> c(static_cast<size_t>(n), 0);
    c[static_cast<size_t>(i)] = 1;
    c[static_cast<size_t>(j)] = sj;
    return LinearForm(std::move(c));
}

} // namespace

Arrangement build_coxeter(char family, int rank) {
    Arrangement a;
    a.ambient_dim = rank;
    CoxeterSpec spec;
    spec.family = family;
    spec.rank = rank;
    switch (family) {
    case 'A': {
        if (rank < 1) throw input_error("type A requires rank >= 1");
        for (int i = 0; i < rank; ++i) a.hyperplanes.push_back(unit_form(rank, i));
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                a.hyperplanes.push_back(pair_form(rank, i, j, -1));
        spec.coxeter_number = rank + 1;
        for (int i = 1; i <= rank; ++i) spec.exponents.push_back(i);
        break;
    }
    case 'B': {
        if (rank < 2) throw input_error("type B requires rank >= 2");
        for (int i = 0; i < rank; ++i) a.hyperplanes.push_back(unit_form(rank, i));
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                a.hyperplanes.push_back(pair_form(rank, i, j, -1));
                a.hyperplanes.push_back(pair_form(rank, i, j, +1));
            }
        }
        spec.coxeter_number = 2 * rank;
        for (int i = 1; i <= rank; ++i) spec.exponents.push_back(2 * i - 1);
        break;
    }
    case 'D': {
        if (rank < 4) throw input_error("type D requires rank >= 4");
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                a.hyperplanes.push_back(pair_form(rank, i, j, -1));
                a.hyperplanes.push_back(pair_form(rank, i, j, +1));
            }
        }
        spec.coxeter_number = 2 * rank - 2;
        for (int i = 1; i < rank; ++i) spec.exponents.push_back(2 * i - 1);
        spec.exponents.push_back(rank - 1);
        std::sort(spec.exponents.begin(), spec.exponents.end());
        break;
    }
    default:
        throw input_error(std::string("unsupported family '") + family +
                          "' (supported: A, B, D)");
    }
    a.coxeter = spec;
    return a;
}

MultiPoly defining_poly(const Arrangement& a, const Multiplicity& m) {
    if (m.size() != a.size())
        throw input_error("multiplicity length does not match arrangement size");
    MultiPoly q = MultiPoly::constant(a.ambient_dim, Rational(1));
    for (size_t i = 0; i < a.size(); ++i) {
        if (m[i] > 0) q = q * MultiPoly::from_linear(a.hyperplanes[i]).pow(m[i]);
    }
    return q;
}

LoadedArrangement parse_arrangement_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    try {
        LoadedArrangement out;
        if (!j.contains("ambient_dim") || !j.contains("hyperplanes"))
            throw input_error("arrangement file needs \"ambient_dim\" and \"hyperplanes\"");
        int n = j.at("ambient_dim").get<int>();
        if (n < 1) throw input_error("ambient_dim must be positive");
        out.arrangement.ambient_dim = n;
        bool any_mult = false;
        std::vector<int> mult;
        std::set<LinearForm> seen;
        for (const auto& h : j.at("hyperplanes")) {
            std::vector<long long> c = h.at("form").get<std::vector<long long>>();
            if (static_cast<int>(c.size()) != n)
                throw input_error("form length does not match ambient_dim");
            LinearForm alpha(std::move(c));
            if (alpha.is_zero()) throw input_error("zero form is not a hyperplane");
            if (!seen.insert(alpha).second)
                throw input_error("duplicate hyperplane after normalization: " +
                                  alpha.str(default_var_names(n)));
            out.arrangement.hyperplanes.push_back(alpha);
            int mv = 1;
            if (h.contains("multiplicity")) {
                any_mult = true;
                mv = h.at("multiplicity").get<int>();
                if (mv < 0) throw input_error("negative multiplicity");
            }
            mult.push_back(mv);
        }
        if (j.contains("coxeter")) {
            const auto& cx = j.at("coxeter");
            std::string fam = cx.at("family").get<std::string>();
            if (fam.size() != 1) throw input_error("coxeter.family must be one letter");
            Arrangement ref = build_coxeter(fam[0], cx.at("rank").get<int>());
            if (ref.hyperplanes != out.arrangement.hyperplanes ||
                ref.ambient_dim != out.arrangement.ambient_dim)
                throw input_error("coxeter tag does not match the listed hyperplanes");
            out.arrangement.coxeter = ref.coxeter;
        }
        if (any_mult) out.multiplicity = Multiplicity{std::move(mult)};
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed arrangement file: ") + e.what());
    }
}

LoadedArrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_arrangement_json(text);
}

std::string arrangement_to_json(const Arrangement& a,
                                const std::optional<Multiplicity>& m) {
    if (m && m->size() != a.size())
        throw input_error("multiplicity length does not match arrangement size");
    nlohmann::json j;
    j["ambient_dim"] = a.ambient_dim;
    nlohmann::json hs = nlohmann::json::array();
    for (size_t i = 0; i < a.size(); ++i) {
        nlohmann::json h;
        h["form"] = a.hyperplanes[i].coeffs();
        if (m) h["multiplicity"] = (*m)[i];
        hs.push_back(h);
    }
    j["hyperplanes"] = hs;
    if (a.coxeter) {
        j["coxeter"] = {{"family", std::string(1, a.coxeter->family)},
                        {"rank", a.coxeter->rank}};
    }
    return j.dump(2);
}

void save_arrangement(const std::string& path, const Arrangement& a,
                      const std::optional<Multiplicity>& m) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << arrangement_to_json(a, m) << "\n";
}

} // namespace coxma
