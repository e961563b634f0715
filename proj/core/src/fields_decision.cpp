#include "ringlab/fields_decision.hpp"

#include "ringlab/ideal.hpp"
#include "ringlab/parse.hpp"

namespace ringlab {

namespace {

Element proof_witness_in(const FactorDecomposition& dec, const SearchBudget& budget) {
    for (const auto& factor : dec.factors) {
        if (is_field(factor)) continue;
        for (const auto& y : factor.carrier) {
            if (factor_inverse(factor, y)) continue;
            if (mul(y, y) == y) continue;
            // Inclusion is the identity on the carrier: y already sits in the
            // parent with zero components in every other factor.
            auto membership = in_ideal(y, {mul(y, y)}, budget);
            if (membership)
                throw error("proof_witness: constructed element lies in the ideal of its square");
            return y;
        }
        throw error("proof_witness: non-field factor without a witness candidate");
    }
    throw error("proof_witness: ring is a product of fields");
}

} // namespace

FieldsVerdict square_ideal_holds(const RingPtr& ring, const SearchBudget& budget) {
    const std::uint64_t m = checked_order(ring, budget);
    FieldsVerdict v;
    v.ring = ring;
    v.method = VerdictMethod::criterion;
    for (std::uint64_t i = 0; i < m; ++i) {
        Element f = element_at(ring, i);
        if (!in_ideal(f, {mul(f, f)}, budget)) {
            v.is_product_of_fields = false;
            v.witness = f;
            return v;
        }
    }
    v.is_product_of_fields = true;
    return v;
}

bool is_field(const RingPtr& ring, const SearchBudget& budget) {
    const std::uint64_t m = checked_order(ring, budget);
    for (std::uint64_t i = 1; i < m; ++i) {
        Element a = element_at(ring, i);
        if (is_zero(a)) continue;
        if (!is_unit(a, budget)) return false;
    }
    return true;
}

std::optional<Element> factor_inverse(const FactorRing& factor, const Element& y) {
    for (const auto& b : factor.carrier)
        if (mul(y, b) == factor.unit) return b;
    return std::nullopt;
}

bool is_field(const FactorRing& factor) {
    for (const auto& y : factor.carrier) {
        if (is_zero(y)) continue;
        if (!factor_inverse(factor, y)) return false;
    }
    return factor.order() >= 2;
}

FieldsVerdict product_of_fields_oracle(const RingPtr& ring, const SearchBudget& budget) {
    FieldsVerdict v;
    v.ring = ring;
    v.method = VerdictMethod::oracle;
    FactorDecomposition dec = decompose(ring, budget);
    bool all_fields = true;
    for (const auto& f : dec.factors)
        if (!is_field(f)) {
            all_fields = false;
            break;
        }
    v.is_product_of_fields = all_fields;
    if (all_fields)
        v.field_factors = dec.factors;
    else
        v.witness = proof_witness_in(dec, budget);
    return v;
}

Element proof_witness(const RingPtr& ring, const SearchBudget& budget) {
    FactorDecomposition dec = decompose(ring, budget);
    return proof_witness_in(dec, budget);
}

EquivalenceReport theorem_equivalence_check(const RingPtr& ring, const SearchBudget& budget) {
    EquivalenceReport rep;
    rep.ring = ring;
    rep.criterion = square_ideal_holds(ring, budget);
    rep.oracle = product_of_fields_oracle(ring, budget);
    rep.agree = rep.criterion.is_product_of_fields == rep.oracle.is_product_of_fields;
    if (!rep.agree) {
        rep.discrepancy = "criterion says " +
                          std::string(rep.criterion.is_product_of_fields ? "true" : "false") +
                          ", oracle says " +
                          std::string(rep.oracle.is_product_of_fields ? "true" : "false") +
                          " on " + to_spec(*ring);
    }
    return rep;
}

bool is_nilpotent(const Element& a) {
    if (!a.ring()->order_exact())
        throw error("is_nilpotent: ring order overflow");
    Element b = a;
    // squaring until the exponent passes the ring order
    std::uint64_t exponent = 1;
    const std::uint64_t m = a.ring()->order();
    for (;;) {
        if (is_zero(b)) return true;
        if (exponent >= m) return false;
        b = mul(b, b);
        exponent *= 2;
    }
}

bool has_nonzero_nilpotent(const RingPtr& ring, const SearchBudget& budget) {
    const std::uint64_t m = checked_order(ring, budget);
    for (std::uint64_t i = 1; i < m; ++i) {
        Element a = element_at(ring, i);
        if (is_zero(a)) continue;
        if (is_nilpotent(a)) return true;
    }
    return false;
}

} // namespace ringlab
