#include "ringlab/spectrum.hpp"

#include <algorithm>
#include <random>

namespace ringlab {

namespace {

bool is_idempotent(const Element& x) { return mul(x, x) == x; }

FactorRing make_factor(const RingPtr& parent, const Element& unit,
                       const std::vector<Element>& ambient) {
    FactorRing f;
    f.parent = parent;
    f.unit = unit;
    std::vector<std::uint64_t> seen;
    seen.reserve(ambient.size());
    for (const auto& x : ambient) seen.push_back(index_of(mul(unit, x)));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    f.carrier_indices = std::move(seen);
    f.carrier.reserve(f.carrier_indices.size());
    for (auto idx : f.carrier_indices) f.carrier.push_back(element_at(parent, idx));
    return f;
}

// First idempotent in the carrier that is neither 0 nor the factor's unit.
std::optional<Element> first_nontrivial_idempotent(const FactorRing& f) {
    for (const auto& y : f.carrier) {
        if (is_zero(y) || y == f.unit) continue;
        if (is_idempotent(y)) return y;
    }
    return std::nullopt;
}

void decompose_into(const FactorRing& f, std::vector<FactorRing>& out) {
    auto e = first_nontrivial_idempotent(f);
    if (!e) {
        out.push_back(f);
        return;
    }
    Element complement = sub(f.unit, *e);
    decompose_into(make_factor(f.parent, *e, f.carrier), out);
    decompose_into(make_factor(f.parent, complement, f.carrier), out);
}

} // namespace

bool FactorRing::contains(const Element& x) const {
    return std::binary_search(carrier_indices.begin(), carrier_indices.end(), index_of(x));
}

std::vector<Element> idempotents(const RingPtr& ring, const SearchBudget& budget) {
    const std::uint64_t m = checked_order(ring, budget);
    std::vector<Element> out;
    for (std::uint64_t i = 0; i < m; ++i) {
        Element x = element_at(ring, i);
        if (is_idempotent(x)) out.push_back(x);
    }
    return out;
}

bool is_connected(const RingPtr& ring, const SearchBudget& budget) {
    return idempotents(ring, budget).size() == 2;
}

FactorRing factor_of(const RingPtr& ring, const Element& idempotent,
                     const SearchBudget& budget) {
    if (!same_ring(idempotent.ring(), ring))
        throw ring_mismatch_error("factor_of: idempotent from a different ring");
    if (!is_idempotent(idempotent)) throw error("factor_of: element is not idempotent");
    return make_factor(ring, idempotent, all_elements(ring, budget));
}

std::pair<FactorRing, FactorRing> split(const RingPtr& ring, const Element& e,
                                        const SearchBudget& budget) {
    if (!same_ring(e.ring(), ring))
        throw ring_mismatch_error("split: idempotent from a different ring");
    if (!is_idempotent(e)) throw error("split: element is not idempotent");
    if (is_zero(e) || is_one(e)) throw error("split: idempotent must be nontrivial");
    auto ambient = all_elements(ring, budget);
    FactorRing a = make_factor(ring, e, ambient);
    FactorRing b = make_factor(ring, sub(one(ring), e), ambient);
    if (a.order() * b.order() != ring->order())
        throw error("split: factor orders do not multiply to the ring order");
    return {std::move(a), std::move(b)};
}

std::vector<Element> factor_idempotents(const FactorRing& factor) {
    std::vector<Element> out;
    for (const auto& y : factor.carrier)
        if (is_idempotent(y)) out.push_back(y);
    return out;
}

bool factor_is_connected(const FactorRing& factor) {
    return factor_idempotents(factor).size() == 2 ||
           (factor.order() == 1 && factor_idempotents(factor).size() == 1);
}

std::vector<Element> FactorDecomposition::forward(const Element& x) const {
    std::vector<Element> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.project(x));
    return out;
}

Element FactorDecomposition::backward(const std::vector<Element>& parts) const {
    Element acc = zero(parent);
    for (const auto& y : parts) acc = add(acc, y);
    return acc;
}

FactorDecomposition decompose(const RingPtr& ring, const SearchBudget& budget) {
    auto idems = idempotents(ring, budget);
    FactorRing whole = factor_of(ring, one(ring), budget);

    FactorDecomposition dec;
    dec.parent = ring;
    decompose_into(whole, dec.factors);
    std::sort(dec.factors.begin(), dec.factors.end(),
              [](const FactorRing& a, const FactorRing& b) {
                  if (a.order() != b.order()) return a.order() < b.order();
                  return index_of(a.unit) < index_of(b.unit);
              });

    // s connected factors carry exactly 2^s idempotents
    std::uint64_t expected = std::uint64_t{1} << dec.factors.size();
    if (idems.size() != expected)
        throw error("decompose: idempotent count " + std::to_string(idems.size()) +
                    " is not 2^(number of factors)");

    auto check = verify_decomposition(dec, budget);
    if (!check.ok) throw error("decompose: verification failed: " + check.detail);
    return dec;
}

DecompositionCheck verify_decomposition(const FactorDecomposition& dec,
                                        const SearchBudget& budget,
                                        std::uint64_t sample_seed) {
    auto fail = [](std::string what) { return DecompositionCheck{false, std::move(what)}; };
    const RingPtr& R = dec.parent;
    const std::uint64_t m = checked_order(R, budget);

    if (dec.factors.empty()) return fail("no factors");

    Element unit_sum = zero(R);
    std::uint64_t order_product = 1;
    for (const auto& f : dec.factors) {
        if (!is_idempotent(f.unit)) return fail("factor unit is not idempotent");
        unit_sum = add(unit_sum, f.unit);
        order_product *= f.order();
        for (const auto& y : f.carrier)
            if (!(mul(f.unit, y) == y)) return fail("factor unit does not fix its carrier");
        if (!factor_is_connected(f)) return fail("factor is not connected");
    }
    if (!is_one(unit_sum)) return fail("factor units do not sum to one");
    if (order_product != m) return fail("factor orders do not multiply to the ring order");
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
        for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
            if (!is_zero(mul(dec.factors[i].unit, dec.factors[j].unit)))
                return fail("factor units are not orthogonal");

    // unital
    {
        auto f1 = dec.forward(one(R));
        for (std::size_t i = 0; i < dec.factors.size(); ++i)
            if (!(f1[i] == dec.factors[i].unit)) return fail("forward(1) is not the unit tuple");
        if (!is_zero(dec.backward(dec.forward(zero(R))))) return fail("forward(0) is not zero");
    }

    // bijectivity: backward is a left inverse, and orders already match
    const bool exhaustive_elems = m <= 4096;
    std::mt19937_64 rng(sample_seed);
    auto sample_index = [&]() { return rng() % m; };
    {
        const std::uint64_t rounds = exhaustive_elems ? m : 1000;
        for (std::uint64_t r = 0; r < rounds; ++r) {
            std::uint64_t i = exhaustive_elems ? r : sample_index();
            Element x = element_at(R, i);
            auto tuple = dec.forward(x);
            for (std::size_t k = 0; k < dec.factors.size(); ++k)
                if (!dec.factors[k].contains(tuple[k]))
                    return fail("projection leaves the factor carrier");
            if (!(dec.backward(tuple) == x)) return fail("backward(forward(x)) != x");
        }
    }

    // ring homomorphism on pairs; exhaustive only while the precomputed
    // projection table stays cheap
    {
        const bool exhaustive_pairs = m <= 128;
        std::vector<Element> elems;
        std::vector<std::vector<Element>> images;
        if (exhaustive_pairs) {
            elems.reserve(m);
            images.reserve(m);
            for (std::uint64_t i = 0; i < m; ++i) {
                elems.push_back(element_at(R, i));
                images.push_back(dec.forward(elems.back()));
            }
        }
        const std::uint64_t rounds = exhaustive_pairs ? m * m : 1000;
        for (std::uint64_t r = 0; r < rounds; ++r) {
            const std::uint64_t i = exhaustive_pairs ? r / m : sample_index();
            const std::uint64_t j = exhaustive_pairs ? r % m : sample_index();
            const Element x = exhaustive_pairs ? elems[i] : element_at(R, i);
            const Element y = exhaustive_pairs ? elems[j] : element_at(R, j);
            const auto fx = exhaustive_pairs ? images[i] : dec.forward(x);
            const auto fy = exhaustive_pairs ? images[j] : dec.forward(y);
            auto fsum = dec.forward(add(x, y));
            auto fprod = dec.forward(mul(x, y));
            for (std::size_t k = 0; k < dec.factors.size(); ++k) {
                if (!(fsum[k] == add(fx[k], fy[k]))) return fail("forward does not preserve add");
                if (!(fprod[k] == mul(fx[k], fy[k]))) return fail("forward does not preserve mul");
            }
        }
    }

    return {};
}

} // namespace ringlab
