#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spectrum.hpp"

// Two independent deciders for "R is a finite direct product of fields":
//
//   criterion  every f satisfies f in (f^2); the first failing f (in
//              enumeration order) is returned as a witness, and such a
//              witness is exactly a nonzero element with no quasi-inverse.
//   oracle     decompose into connected factors and field-check each one;
//              on failure the witness is rebuilt the constructive way: a
//              non-unit non-idempotent of a non-field factor, included back
//              into the parent with zeros elsewhere.
//
// The two must agree on every ring; any disagreement is a bug, never
// mathematics.

namespace ringlab {

enum class VerdictMethod { criterion, oracle, proof_witness };

struct FieldsVerdict {
    RingPtr ring;
    bool is_product_of_fields = false;
    VerdictMethod method = VerdictMethod::criterion;
    std::optional<Element> witness;               // present iff verdict is false
    std::optional<std::vector<FactorRing>> field_factors; // oracle only, iff verdict is true
};

// Scans all f in enumeration order for f in (f^2).
FieldsVerdict square_ideal_holds(const RingPtr& ring, const SearchBudget& budget = {});

// Every nonzero element has a multiplicative inverse.
bool is_field(const RingPtr& ring, const SearchBudget& budget = {});
bool is_field(const FactorRing& factor);

// Inverse inside a factor carrier, with respect to the factor's unit.
std::optional<Element> factor_inverse(const FactorRing& factor, const Element& y);

// decompose + field-check every factor.
FieldsVerdict product_of_fields_oracle(const RingPtr& ring, const SearchBudget& budget = {});

// The constructive witness for a ring that is not a product of fields:
// first non-field factor, first element of it that is neither a unit nor
// an idempotent, included into the parent. Verified to lie outside the
// ideal of its square before it is returned. Throws on a product of fields.
Element proof_witness(const RingPtr& ring, const SearchBudget& budget = {});

struct EquivalenceReport {
    RingPtr ring;
    FieldsVerdict criterion;
    FieldsVerdict oracle;
    bool agree = false;
    std::string discrepancy; // empty when the verdicts agree
};

// Runs both engines independently and reports agreement.
EquivalenceReport theorem_equivalence_check(const RingPtr& ring, const SearchBudget& budget = {});

// Repeated squaring; the chain of ideals (a) > (a^2) > ... halves the order
// at every strict step, so log2(order)+1 squarings decide nilpotency.
bool is_nilpotent(const Element& a);
bool has_nonzero_nilpotent(const RingPtr& ring, const SearchBudget& budget = {});

} // namespace ringlab
