#include "valvol/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "valvol/errors.hpp"
#include "valvol/lattice_kernels.hpp"

namespace valvol {

bool divides(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw MixedArity("exponent vectors of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw MixedArity("exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw MixedArity("exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exponent_sub_clamped(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw MixedArity("exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max<Exponent>(a[i] - b[i], 0);
    return r;
}

Exponent total_degree(const Exponents& a) {
    Exponent d = 0;
    for (Exponent e : a) d += e;
    return d;
}

bool lex_less(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string monomial_to_string(const Exponents& e, std::span<const std::string> vars) {
    static const char* default_names[] = {"x", "y", "z", "w"};
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        std::string name = i < vars.size()
                               ? vars[i]
                               : (e.size() <= 4 ? default_names[i] : "x" + std::to_string(i + 1));
        out += name;
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<Exponents> minimal_elements(std::vector<Exponents> points) {
    // Sorting by total degree first means a point can only be divided by an
    // earlier survivor.
    std::sort(points.begin(), points.end(), [](const Exponents& a, const Exponents& b) {
        Exponent da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Exponents> keep;
    for (const Exponents& p : points) {
        bool dominated = false;
        for (const Exponents& k : keep) {
            if (divides(k, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(p);
    }
    std::sort(keep.begin(), keep.end(), lex_less);
    return keep;
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(int n) {
    return MonomialIdeal(n, {Exponents(static_cast<std::size_t>(n), 0)});
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Exponents> gens) {
    if (n < 1) throw Error("MonomialIdeal: need at least one variable");
    for (const Exponents& g : gens) {
        if (static_cast<int>(g.size()) != n) throw MixedArity("generator arity differs from ring arity");
        for (Exponent e : g) {
            if (e < 0) throw Error("MonomialIdeal: negative exponent");
        }
    }
    return MonomialIdeal(n, minimal_elements(std::move(gens)));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains(const Exponents& m) const {
    if (static_cast<int>(m.size()) != n_) throw MixedArity("monomial arity differs from ring arity");
    for (const Exponents& g : gens_) {
        if (divides(g, m)) return true;
    }
    return false;
}

std::optional<Exponents> MonomialIdeal::pure_power_bounds() const {
    Exponents bounds(static_cast<std::size_t>(n_), -1);
    for (const Exponents& g : gens_) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < n_; ++i) {
            if (g[static_cast<std::size_t>(i)] > 0) {
                if (support >= 0) {
                    pure = false;
                    break;
                }
                support = i;
            }
        }
        if (!pure) continue;
        if (support < 0) {  // unit ideal
            for (auto& b : bounds) b = 0;
            return bounds;
        }
        bounds[static_cast<std::size_t>(support)] = g[static_cast<std::size_t>(support)];
    }
    for (Exponent b : bounds) {
        if (b < 0) return std::nullopt;
    }
    return bounds;
}

std::int64_t MonomialIdeal::length_of_quotient() const {
    auto bounds = pure_power_bounds();
    if (!bounds) throw InfiniteColength("some variable has no pure power in the ideal");
    return staircase_box_count(*this, *bounds);
}

std::string MonomialIdeal::to_string(std::span<const std::string> vars) const {
    if (is_zero()) return "0";
    std::string out;
    // Highest powers of the first variable first; storage stays lex-ascending.
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
        if (!out.empty()) out += ", ";
        out += monomial_to_string(*it, vars);
    }
    return out;
}

bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw MixedArity("ideals in different rings");
    for (const Exponents& g : I.min_gens()) {
        if (!J.contains(g)) return false;
    }
    return true;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw MixedArity("ideals in different rings");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.nvars());
    std::vector<Exponents> sums;
    sums.reserve(I.min_gens().size() * J.min_gens().size());
    for (const Exponents& a : I.min_gens()) {
        for (const Exponents& b : J.min_gens()) sums.push_back(exponent_sum(a, b));
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& I, std::int64_t ell) {
    if (ell < 0) throw Error("power: negative exponent");
    MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
    for (std::int64_t k = 0; k < ell; ++k) acc = product(acc, I);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw MixedArity("ideals in different rings");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.nvars());
    std::vector<Exponents> lcms;
    lcms.reserve(I.min_gens().size() * J.min_gens().size());
    for (const Exponents& a : I.min_gens()) {
        for (const Exponents& b : J.min_gens()) lcms.push_back(exponent_lcm(a, b));
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw MixedArity("ideals in different rings");
    // (I : J) = intersection over generators g of J of (I : x^g).
    if (J.is_zero()) return MonomialIdeal::unit(I.nvars());
    if (I.is_zero()) return MonomialIdeal::zero(I.nvars());
    MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
    bool first = true;
    for (const Exponents& g : J.min_gens()) {
        std::vector<Exponents> shifted;
        shifted.reserve(I.min_gens().size());
        for (const Exponents& h : I.min_gens()) shifted.push_back(exponent_sub_clamped(h, g));
        MonomialIdeal part = MonomialIdeal::from_generators(I.nvars(), std::move(shifted));
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

}  // namespace valvol
