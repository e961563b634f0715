#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here stays deliberately naive and independent of the search
// strategies it validates: flat scans, full tables, linear power chains.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ringlab/lift.hpp"
#include "ringlab/ring.hpp"

namespace oracle {

using namespace ringlab;

// Flat odometer scan over all coefficient tuples, coordinate 0 fastest.
inline std::optional<std::vector<Element>> in_ideal_bruteforce(const Element& f,
                                                               const std::vector<Element>& gens) {
    const RingPtr& R = f.ring();
    if (gens.empty()) return is_zero(f) ? std::make_optional(std::vector<Element>{}) : std::nullopt;
    const std::uint64_t m = R->order();
    std::vector<std::uint64_t> idx(gens.size(), 0);
    for (;;) {
        Element acc = zero(R);
        for (std::size_t i = 0; i < gens.size(); ++i)
            acc = add(acc, mul(element_at(R, idx[i]), gens[i]));
        if (acc == f) {
            std::vector<Element> out;
            for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(element_at(R, idx[i]));
            return out;
        }
        std::size_t pos = 0;
        while (pos < gens.size() && ++idx[pos] == m) idx[pos++] = 0;
        if (pos == gens.size()) return std::nullopt;
    }
}

// Unit group from the full multiplication table.
inline std::set<std::uint64_t> units_by_table(const RingPtr& R) {
    std::set<std::uint64_t> units;
    const std::uint64_t m = R->order();
    const Element e1 = one(R);
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j)
            if (mul(element_at(R, i), element_at(R, j)) == e1) units.insert(i);
    return units;
}

// Flat tuple scan over carrier coefficients for the one-step equation.
inline bool one_step_solvable_bruteforce(const TruncatedRing& tr, const Element& u,
                                         const std::vector<Element>& gens) {
    const RingPtr& R = tr.carrier;
    const std::uint64_t m = R->order();
    if (gens.empty()) return is_zero(u);
    std::vector<std::uint64_t> idx(gens.size(), 0);
    for (;;) {
        Element acc = zero(R);
        for (std::size_t i = 0; i < gens.size(); ++i)
            acc = add(acc, mul(element_at(R, idx[i]), gens[i]));
        if (acc == u) return true;
        std::size_t pos = 0;
        while (pos < gens.size() && ++idx[pos] == m) idx[pos++] = 0;
        if (pos == gens.size()) return false;
    }
}

// Nilpotency by the linear power chain a, a^2, a^3, ... up to order steps.
inline bool nilpotent_by_powers(const Element& a) {
    Element p = a;
    for (std::uint64_t step = 0; step < a.ring()->order(); ++step) {
        if (is_zero(p)) return true;
        p = mul(p, a);
    }
    return is_zero(p);
}

// Small random descriptors for property tests.
inline RingPtr random_ring(std::mt19937_64& rng, std::uint64_t max_order, int depth = 2) {
    const std::uint64_t pick = rng() % (depth > 0 ? 4 : 2);
    switch (pick) {
    case 0:
    case 1:
        return Ring::zmod(2 + rng() % 11);
    case 2: {
        RingPtr base = random_ring(rng, max_order, depth - 1);
        std::size_t degree = 1 + rng() % 3;
        while (true) {
            unsigned __int128 o = 1;
            for (std::size_t i = 0; i < degree; ++i) o *= base->order();
            if (o <= max_order || degree == 1) break;
            --degree;
        }
        std::vector<Value> modulus;
        for (std::size_t i = 0; i < degree; ++i)
            modulus.push_back(element_at(base, rng() % base->order()).value());
        modulus.push_back(one(base).value());
        RingPtr r = Ring::quot(base, std::move(modulus));
        if (r->order_exact() && r->order() <= max_order) return r;
        return base;
    }
    default: {
        RingPtr a = random_ring(rng, max_order, depth - 1);
        RingPtr b = random_ring(rng, max_order, depth - 1);
        RingPtr r = Ring::prod({a, b});
        if (r->order_exact() && r->order() <= max_order) return r;
        return a;
    }
    }
}

inline Element random_element(std::mt19937_64& rng, const RingPtr& R) {
    return element_at(R, rng() % R->order());
}

} // namespace oracle
