#include "valvol/newton.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "valvol/errors.hpp"

namespace valvol {

namespace {

using RRow = std::vector<Rational>;
using RMat = std::vector<RRow>;

// Row-reduce in place; returns the rank.
int row_reduce(RMat& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col].reciprocal();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

// One-dimensional nullspace of an (n-1)-row system, or nullopt.
std::optional<RRow> nullspace_direction(RMat m, int n) {
    int rank = row_reduce(m);
    if (rank != n - 1) return std::nullopt;
    // Identify pivot columns.
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    std::size_t r = 0;
    for (int c = 0; c < n && r < m.size(); ++c) {
        if (!m[r][static_cast<std::size_t>(c)].is_zero()) {
            pivot_col.push_back(c);
            is_pivot[static_cast<std::size_t>(c)] = true;
            ++r;
        }
    }
    int free_col = -1;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            free_col = c;
            break;
        }
    }
    RRow v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(free_col)] = Rational(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        v[static_cast<std::size_t>(pivot_col[i])] = -m[i][static_cast<std::size_t>(free_col)];
    }
    return v;
}

// Scale a rational direction to a primitive integer vector.
std::vector<std::int64_t> to_primitive(const RRow& v) {
    BigInt lcm(1);
    for (const Rational& x : v) {
        BigInt d = x.denominator();
        lcm = BigInt::divexact(lcm * d, BigInt::gcd(lcm, d));
    }
    std::vector<BigInt> ints;
    BigInt g(0);
    for (const Rational& x : v) {
        BigInt e = BigInt::divexact(x.numerator() * lcm, x.denominator());
        g = BigInt::gcd(g, e);
        ints.push_back(std::move(e));
    }
    std::vector<std::int64_t> out;
    for (BigInt& e : ints) out.push_back(g.is_zero() ? 0 : BigInt::divexact(e, g).to_int64());
    return out;
}

std::int64_t dot(const std::vector<std::int64_t>& v, const Exponents& p) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * p[i];
    return s;
}

// All k-element index subsets of {0,..,total-1}.
void for_each_subset(int total, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > total) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
    const int n = I.nvars();
    if (n > 4) throw UnsupportedDimension("Newton polyhedra are supported for up to four variables");
    if (I.is_zero()) throw Error("newton_polyhedron: zero ideal");
    const auto& gens = I.min_gens();
    const int g_count = static_cast<int>(gens.size());

    // Candidate supporting hyperplanes pass through k generators and n-k
    // recession rays; each choice pins the normal up to scale.
    std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, Facet> found;
    for (int k = 1; k <= n; ++k) {
        for_each_subset(g_count, k, [&](const std::vector<int>& gi) {
            for_each_subset(n, n - k, [&](const std::vector<int>& rays) {
                RMat rows;
                const Exponents& base = gens[static_cast<std::size_t>(gi[0])];
                for (int j = 1; j < k; ++j) {
                    const Exponents& g = gens[static_cast<std::size_t>(gi[static_cast<std::size_t>(j)])];
                    RRow row;
                    for (int c = 0; c < n; ++c)
                        row.push_back(Rational(g[static_cast<std::size_t>(c)] - base[static_cast<std::size_t>(c)]));
                    rows.push_back(std::move(row));
                }
                for (int ray : rays) {
                    RRow row(static_cast<std::size_t>(n), Rational(0));
                    row[static_cast<std::size_t>(ray)] = Rational(1);
                    rows.push_back(std::move(row));
                }
                auto dir = nullspace_direction(std::move(rows), n);
                if (!dir) return;
                std::vector<std::int64_t> v = to_primitive(*dir);
                bool has_pos = false, has_neg = false;
                for (std::int64_t x : v) {
                    if (x > 0) has_pos = true;
                    if (x < 0) has_neg = true;
                }
                if (has_pos && has_neg) return;  // mixed signs never support the orthant recession
                if (has_neg) {
                    for (auto& x : v) x = -x;
                }
                std::int64_t w = dot(v, base);
                for (const Exponents& g : gens) {
                    if (dot(v, g) < w) return;
                }
                found.emplace(std::make_pair(v, w), Facet{v, w});
            });
        });
    }

    NewtonPolyhedron P;
    P.n = n;
    for (auto& [key, f] : found) P.facets.push_back(std::move(f));

    // A generator is a vertex when the inequalities active there (facets plus
    // the always-valid coordinate inequalities) have full-rank normals.
    for (const Exponents& g : gens) {
        RMat active;
        for (const Facet& f : P.facets) {
            if (dot(f.normal, g) == f.offset) {
                RRow row;
                for (std::int64_t x : f.normal) row.push_back(Rational(x));
                active.push_back(std::move(row));
            }
        }
        for (int i = 0; i < n; ++i) {
            if (g[static_cast<std::size_t>(i)] == 0) {
                RRow row(static_cast<std::size_t>(n), Rational(0));
                row[static_cast<std::size_t>(i)] = Rational(1);
                active.push_back(std::move(row));
            }
        }
        if (row_reduce(active) == n) P.vertices.push_back(g);
    }
    std::sort(P.vertices.begin(), P.vertices.end(), lex_less);
    return P;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
    const int n = I.nvars();
    if (n > 4) throw UnsupportedDimension("integral closure is supported for up to four variables");
    if (I.is_zero()) return I;
    NewtonPolyhedron P = newton_polyhedron(I);
    // Minimal lattice points of the polyhedron live inside the componentwise
    // generator-maximum box.
    Exponents box(static_cast<std::size_t>(n), 0);
    for (const Exponents& g : I.min_gens())
        for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], g[i]);
    std::vector<Exponents> pts;
    Exponents p(static_cast<std::size_t>(n), 0);
    while (true) {
        bool inside = true;
        for (const Facet& f : P.facets) {
            if (dot(f.normal, p) < f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) pts.push_back(p);
        std::size_t i = 0;
        while (i < p.size()) {
            if (++p[i] <= box[i]) break;
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) break;
    }
    return MonomialIdeal::from_generators(n, std::move(pts));
}

Rational polytope_volume(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t d = A.empty() ? 0 : A[0].size();
    if (d == 0) return Rational(0);

    // Canonicalize rows: primitive integer normals, drop trivial rows, keep
    // the tightest of parallel duplicates so no hyperplane is counted twice.
    std::map<std::vector<std::int64_t>, Rational> rows;
    for (std::size_t i = 0; i < A.size(); ++i) {
        RRow& row = A[i];
        bool zero = true;
        for (const Rational& x : row) zero &= x.is_zero();
        if (zero) {
            if (b[i] < Rational(0)) return Rational(0);  // infeasible
            continue;
        }
        BigInt lcm(1);
        for (const Rational& x : row) {
            BigInt den = x.denominator();
            lcm = BigInt::divexact(lcm * den, BigInt::gcd(lcm, den));
        }
        std::vector<BigInt> ints;
        BigInt g(0);
        for (const Rational& x : row) {
            BigInt e = BigInt::divexact(x.numerator() * lcm, x.denominator());
            g = BigInt::gcd(g, e);
            ints.push_back(std::move(e));
        }
        std::vector<std::int64_t> key;
        for (BigInt& e : ints) key.push_back(BigInt::divexact(e, g).to_int64());
        Rational scaled_b = b[i] * Rational(lcm) / Rational(g);
        auto it = rows.find(key);
        if (it == rows.end())
            rows.emplace(std::move(key), std::move(scaled_b));
        else
            it->second = min(it->second, scaled_b);
    }

    if (d == 1) {
        bool have_up = false, have_dn = false;
        Rational up, dn;
        for (const auto& [a, bb] : rows) {
            Rational bound = bb / Rational(a[0]);
            if (a[0] > 0) {
                up = have_up ? min(up, bound) : bound;
                have_up = true;
            } else {
                dn = have_dn ? max(dn, bound) : bound;
                have_dn = true;
            }
        }
        if (!have_up || !have_dn) throw Error("polytope_volume: unbounded segment");
        return max(Rational(0), up - dn);
    }

    Rational vol(0);
    for (const auto& [a, bb] : rows) {
        // Pivot on the largest coefficient and substitute this facet's
        // hyperplane into the others.
        std::size_t j = 0;
        for (std::size_t c = 1; c < d; ++c) {
            if (std::abs(a[c]) > std::abs(a[j])) j = c;
        }
        Rational aj = Rational(a[j]);
        std::vector<std::vector<Rational>> sub_A;
        std::vector<Rational> sub_b;
        for (const auto& [a2, b2] : rows) {
            if (a2 == a) continue;
            Rational factor = Rational(a2[j]) / aj;
            std::vector<Rational> row;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                row.push_back(Rational(a2[c]) - factor * Rational(a[c]));
            }
            sub_A.push_back(std::move(row));
            sub_b.push_back(b2 - factor * bb);
        }
        Rational face = polytope_volume(std::move(sub_A), std::move(sub_b));
        vol += bb / (Rational(d) * aj.abs()) * face;
    }
    return vol;
}

Rational covolume(const NewtonPolyhedron& P) {
    // Bounded complement needs every non-coordinate facet normal strictly
    // positive.
    for (const Facet& f : P.facets) {
        if (f.offset <= 0) continue;
        for (std::int64_t x : f.normal) {
            if (x == 0) throw UnboundedComplement("orthant complement of the polyhedron is unbounded");
        }
    }
    // Cone the origin over each positive facet; coordinate facets contribute
    // nothing because their hyperplanes pass through the origin.
    Rational vol(0);
    for (const Facet& f : P.facets) {
        if (f.offset <= 0) continue;
        std::size_t j = 0;
        for (std::size_t c = 1; c < f.normal.size(); ++c) {
            if (f.normal[c] > f.normal[j]) j = c;
        }
        if (P.n == 1) {
            vol += Rational(f.offset) / Rational(f.normal[0]);
            continue;
        }
        // Substitute x_j out of every other inequality of the polyhedron,
        // including the orthant bounds, all written as <=.
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        Rational aj(f.normal[j]);
        Rational w(f.offset);
        auto push_le = [&](const std::vector<Rational>& le_row, const Rational& le_b) {
            Rational factor = le_row[j] / aj;
            std::vector<Rational> row;
            for (std::size_t c = 0; c < le_row.size(); ++c) {
                if (c == j) continue;
                row.push_back(le_row[c] - factor * Rational(f.normal[c]));
            }
            A.push_back(std::move(row));
            b.push_back(le_b - factor * w);
        };
        for (const Facet& g : P.facets) {
            if (g == f) continue;
            std::vector<Rational> le_row;
            for (std::int64_t x : g.normal) le_row.push_back(Rational(-x));
            push_le(le_row, Rational(-g.offset));
        }
        for (int i = 0; i < P.n; ++i) {
            std::vector<Rational> le_row(static_cast<std::size_t>(P.n), Rational(0));
            le_row[static_cast<std::size_t>(i)] = Rational(-1);
            push_le(le_row, Rational(0));
        }
        Rational face = polytope_volume(std::move(A), std::move(b));
        vol += w / (Rational(P.n) * aj) * face;
    }
    return vol;
}

std::int64_t multiplicity(const MonomialIdeal& I) {
    if (I.nvars() > 4) throw UnsupportedDimension("multiplicity is supported for up to four variables");
    if (!I.pure_power_bounds()) throw InfiniteColength("multiplicity needs finite colength");
    Rational v = covolume(newton_polyhedron(I));
    for (int k = 2; k <= I.nvars(); ++k) v *= Rational(k);
    if (!v.is_integer()) throw Error("multiplicity: n! * covolume is not an integer");
    return v.numerator().to_int64();
}

MonomialIdeal howald_multiplier_ideal(const MonomialIdeal& I, const Rational& c) {
    const int n = I.nvars();
    if (n > 4) throw UnsupportedDimension("multiplier ideals are supported for up to four variables");
    if (I.is_zero()) throw Error("howald_multiplier_ideal: zero ideal");
    if (c.sign() <= 0) throw Error("howald_multiplier_ideal: coefficient must be positive");
    NewtonPolyhedron P = newton_polyhedron(I);

    // Any minimal exponent is bounded by c*offset/normal_i on some facet.
    Exponents box(static_cast<std::size_t>(n), 0);
    for (const Facet& f : P.facets) {
        Rational cw = c * Rational(f.offset);
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (f.normal[i] > 0) box[i] = std::max(box[i], (cw / Rational(f.normal[i])).floor().to_int64());
        }
    }

    std::vector<Exponents> pts;
    Exponents p(static_cast<std::size_t>(n), 0);
    while (true) {
        bool interior = true;
        for (const Facet& f : P.facets) {
            std::int64_t lhs = dot(f.normal, p);
            for (std::int64_t x : f.normal) lhs += x;  // shift by (1,..,1)
            if (!(Rational(lhs) > c * Rational(f.offset))) {
                interior = false;
                break;
            }
        }
        if (interior) pts.push_back(p);
        std::size_t i = 0;
        while (i < p.size()) {
            if (++p[i] <= box[i]) break;
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) break;
    }
    return MonomialIdeal::from_generators(n, std::move(pts));
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I) {
    if (I.nvars() > 4) throw UnsupportedDimension("Rees valuations are supported for up to four variables");
    if (!I.pure_power_bounds()) throw InfiniteColength("Rees valuations need finite colength");
    NewtonPolyhedron P = newton_polyhedron(I);
    std::vector<ReesValuation> out;
    for (const Facet& f : P.facets) {
        if (f.offset > 0) out.push_back({f.normal, f.offset});
    }
    return out;  // facets are already canonically sorted
}

}  // namespace valvol
