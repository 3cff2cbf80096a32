#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace valvol {

using Exponent = std::int64_t;
// One entry per variable; the componentwise order is divisibility.
using Exponents = std::vector<Exponent>;

bool divides(const Exponents& a, const Exponents& b);  // a_i <= b_i for all i
Exponents exponent_sum(const Exponents& a, const Exponents& b);
Exponents exponent_lcm(const Exponents& a, const Exponents& b);
// max(a - b, 0) componentwise
Exponents exponent_sub_clamped(const Exponents& a, const Exponents& b);
Exponent total_degree(const Exponents& a);
bool lex_less(const Exponents& a, const Exponents& b);

std::string monomial_to_string(const Exponents& e, std::span<const std::string> vars = {});

// A monomial ideal held by its minimal generators: an antichain under
// divisibility, kept lex-sorted so serialized forms are identical across
// runs. No generators encodes the zero ideal; the zero vector alone is the
// unit ideal.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    // Minimalizes; throws MixedArity on unequal lengths.
    static MonomialIdeal from_generators(int n, std::vector<Exponents> gens);

    int nvars() const { return n_; }
    const std::vector<Exponents>& min_gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const Exponents& m) const;

    // Smallest d_i with x_i^d_i in the ideal, when every variable has one.
    std::optional<Exponents> pure_power_bounds() const;

    // Number of standard monomials; InfiniteColength when unbounded.
    std::int64_t length_of_quotient() const;

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string(std::span<const std::string> vars = {}) const;

private:
    MonomialIdeal(int n, std::vector<Exponents> gens) : n_(n), gens_(std::move(gens)) {}
    int n_ = 0;
    std::vector<Exponents> gens_;
};

// Divisibility antichain of the given set (helper shared with the kernels).
std::vector<Exponents> minimal_elements(std::vector<Exponents> points);

bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J);  // I contained in J
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, std::int64_t ell);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
// { m : m*J contained in I }
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace valvol
