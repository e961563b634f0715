#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/ring.hpp"

// Idempotent-driven structure of a finite commutative ring. An idempotent e
// splits R into Re x R(1-e); iterating until only trivial idempotents remain
// exhibits R as a product of connected factors, with explicit mutually
// inverse maps that can be checked by enumeration.

namespace ringlab {

// The subring Re realized as a carrier subset of the parent, with e acting
// as the multiplicative identity. Addition and multiplication are the
// parent's; projection is x -> e*x and inclusion is the identity.
struct FactorRing {
    RingPtr parent;
    Element unit;                        // idempotent e
    std::vector<Element> carrier;        // ascending enumeration order
    std::vector<std::uint64_t> carrier_indices;

    std::uint64_t order() const { return carrier.size(); }
    Element project(const Element& x) const { return mul(unit, x); }
    bool contains(const Element& x) const;
};

// All e with e*e == e, in enumeration order. Contains 0 and 1.
std::vector<Element> idempotents(const RingPtr& ring, const SearchBudget& budget = {});

// Spec R is connected exactly when 0 and 1 are the only idempotents.
bool is_connected(const RingPtr& ring, const SearchBudget& budget = {});

// Carrier subring for a given idempotent.
FactorRing factor_of(const RingPtr& ring, const Element& idempotent,
                     const SearchBudget& budget = {});

// Binary splitting along a nontrivial idempotent: (Re, R(1-e)).
std::pair<FactorRing, FactorRing> split(const RingPtr& ring, const Element& e,
                                        const SearchBudget& budget = {});

// Idempotents of a factor, computed inside its carrier.
std::vector<Element> factor_idempotents(const FactorRing& factor);
bool factor_is_connected(const FactorRing& factor);

struct FactorDecomposition {
    RingPtr parent;
    std::vector<FactorRing> factors; // sorted by (order, unit index)

    // x -> (e_1*x, ..., e_s*x); entries live in the factor carriers.
    std::vector<Element> forward(const Element& x) const;
    // (y_1, ..., y_s) -> sum y_i
    Element backward(const std::vector<Element>& parts) const;
};

// Recursively splits along the first nontrivial idempotent (enumeration
// order) until every factor is connected, then lists factors sorted by
// ascending order. The returned maps are verified before returning:
// exhaustively up to order 4096, on deterministic samples beyond.
FactorDecomposition decompose(const RingPtr& ring, const SearchBudget& budget = {});

struct DecompositionCheck {
    bool ok = true;
    std::string detail;
};

// Re-checks the decomposition invariants: unit idempotency, orthogonality,
// unit sum, order product, factor connectedness, bijectivity of
// forward/backward and the homomorphism laws.
DecompositionCheck verify_decomposition(const FactorDecomposition& dec,
                                        const SearchBudget& budget = {},
                                        std::uint64_t sample_seed = 0);

} // namespace ringlab
