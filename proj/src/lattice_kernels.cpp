#include "valvol/lattice_kernels.hpp"

#include <exception>

#include "valvol/errors.hpp"

namespace valvol {

namespace {

std::int64_t checked_product(const Exponents& dims) {
    std::int64_t p = 1;
    for (Exponent d : dims) {
        if (d <= 0) return 0;
        if (p > (std::int64_t{1} << 52) / d) throw CapacityExceeded("lattice box too large");
        p *= d;
    }
    return p;
}

Exponents decode_index(std::int64_t idx, const Exponents& dims) {
    Exponents p(dims.size(), 0);
    for (std::size_t i = dims.size(); i-- > 0;) {
        p[i] = idx % dims[i];
        idx /= dims[i];
    }
    return p;
}

// Rethrow-after-join guard so exceptions never escape a parallel region.
struct FirstError {
    std::exception_ptr ptr;
    bool armed = false;
    void capture() {
#pragma omp critical(valvol_first_error)
        {
            if (!armed) {
                ptr = std::current_exception();
                armed = true;
            }
        }
    }
    void rethrow_if_set() const {
        if (armed) std::rethrow_exception(ptr);
    }
};

}  // namespace

std::int64_t staircase_box_count_serial(const MonomialIdeal& I, const Exponents& box) {
    const int n = I.nvars();
    if (static_cast<int>(box.size()) != n) throw MixedArity("box arity differs from ring arity");
    std::int64_t total = checked_product(box);
    if (total == 0) return 0;
    std::int64_t count = 0;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        if (!I.contains(decode_index(idx, box))) ++count;
    }
    return count;
}

std::int64_t staircase_box_count(const MonomialIdeal& I, const Exponents& box) {
    const int n = I.nvars();
    if (static_cast<int>(box.size()) != n) throw MixedArity("box arity differs from ring arity");
    for (Exponent b : box) {
        if (b <= 0) return 0;
    }
    // Walk the fibers over the last coordinate; within a fiber the ideal
    // membership threshold is the least last-exponent among applicable
    // generators, so each fiber contributes min(threshold, box_last).
    Exponents prefix_dims(box.begin(), box.end() - 1);
    const Exponent box_last = box.back();
    const std::int64_t fibers = n == 1 ? 1 : checked_product(prefix_dims);
    const auto& gens = I.min_gens();
    std::int64_t count = 0;
    FirstError err;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t idx = 0; idx < fibers; ++idx) {
        try {
            Exponents p = decode_index(idx, prefix_dims);
            Exponent threshold = box_last;
            for (const Exponents& g : gens) {
                bool applies = true;
                for (std::size_t i = 0; i + 1 < g.size(); ++i) {
                    if (g[i] > p[i]) {
                        applies = false;
                        break;
                    }
                }
                if (applies) threshold = std::min(threshold, g.back());
            }
            count += threshold;
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow_if_set();
    return count;
}

std::int64_t weighted_count_below_serial(std::span<const Value> weights, const Value& bound) {
    const int n = static_cast<int>(weights.size());
    if (bound.compare(Value(0)) != Cmp::Greater) return 0;
    Exponents box(weights.size());
    for (int i = 0; i < n; ++i) box[static_cast<std::size_t>(i)] = count_multiples_below(weights[i], bound);
    std::int64_t total = checked_product(box);
    std::int64_t count = 0;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Exponents p = decode_index(idx, box);
        Value s(0);
        for (int i = 0; i < n; ++i) s = s + weights[i].scaled(BigInt(p[static_cast<std::size_t>(i)]));
        if (s.compare(bound) == Cmp::Less) ++count;
    }
    return count;
}

namespace {

std::int64_t count_below_rec(std::span<const Value> weights, std::size_t d, const Value& remaining) {
    if (d + 1 == weights.size()) return count_multiples_below(weights[d], remaining);
    std::int64_t count = 0;
    Value rem = remaining;
    while (rem.compare(Value(0)) == Cmp::Greater) {
        count += count_below_rec(weights, d + 1, rem);
        rem = rem - weights[d];
    }
    return count;
}

}  // namespace

std::int64_t weighted_count_below(std::span<const Value> weights, const Value& bound) {
    if (weights.empty()) throw Error("weighted_count_below: no weights");
    if (bound.compare(Value(0)) != Cmp::Greater) return 0;
    if (weights.size() == 1) return count_multiples_below(weights[0], bound);
    const std::int64_t outer = count_multiples_below(weights[0], bound);
    std::int64_t count = 0;
    FirstError err;
#pragma omp parallel for reduction(+ : count) schedule(dynamic)
    for (std::int64_t a = 0; a < outer; ++a) {
        try {
            Value rem = bound - weights[0].scaled(BigInt(a));
            count += count_below_rec(weights, 1, rem);
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow_if_set();
    return count;
}

std::vector<Exponents> weighted_min_gens_serial(std::span<const Value> weights, const Value& bound) {
    const int n = static_cast<int>(weights.size());
    if (bound.compare(Value(0)) != Cmp::Greater) return {Exponents(weights.size(), 0)};
    Exponents box(weights.size());
    for (int i = 0; i < n; ++i)
        box[static_cast<std::size_t>(i)] = count_multiples_below(weights[i], bound) + 1;
    std::int64_t total = checked_product(box);
    std::vector<Exponents> hits;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Exponents p = decode_index(idx, box);
        Value s(0);
        for (int i = 0; i < n; ++i) s = s + weights[i].scaled(BigInt(p[static_cast<std::size_t>(i)]));
        if (s.compare(bound) != Cmp::Less) hits.push_back(std::move(p));
    }
    return minimal_elements(std::move(hits));
}

std::vector<Exponents> weighted_min_gens(std::span<const Value> weights, const Value& bound) {
    const std::size_t n = weights.size();
    if (n == 0) throw Error("weighted_min_gens: no weights");
    if (bound.compare(Value(0)) != Cmp::Greater) return {Exponents(n, 0)};
    if (n == 1) return {Exponents{count_multiples_below(weights[0], bound)}};
    // One candidate per prefix: the least last-coordinate that reaches the
    // bound. Everything deeper along the fiber is dominated.
    Exponents prefix_dims(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        prefix_dims[i] = count_multiples_below(weights[i], bound) + 1;
    const std::int64_t prefixes = checked_product(prefix_dims);
    std::vector<Exponents> candidates(static_cast<std::size_t>(prefixes));
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < prefixes; ++idx) {
        try {
            Exponents p = decode_index(idx, prefix_dims);
            Value rem = bound;
            for (std::size_t i = 0; i + 1 < n; ++i) rem = rem - weights[i].scaled(BigInt(p[i]));
            p.push_back(count_multiples_below(weights[n - 1], rem));
            candidates[static_cast<std::size_t>(idx)] = std::move(p);
        } catch (...) {
            err.capture();
        }
    }
    err.rethrow_if_set();
    return minimal_elements(std::move(candidates));
}

}  // namespace valvol
