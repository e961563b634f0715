#pragma once

#include <optional>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// How membership witnesses are searched for.
//
//   exhaustive  baseline: scan coefficient tuples in enumeration order
//               (coordinate 1 varies fastest); needs order^k tuples within
//               the tuple budget.
//   additive    linear solve over the additive group: breadth-first closure
//               of the subgroup generated by basis*gen products, with the
//               witness read back off the search tree.
//   automatic   structural dispatch: extended-gcd congruences for Z/n,
//               componentwise for products, scan for a single generator,
//               additive closure otherwise.
//
// All routes are exact and agree on solvability; returned witnesses are
// re-verified by multiplication before they are handed out.
enum class MembershipStrategy { automatic, exhaustive, additive };

// Coefficients (c_1..c_k) with f = sum c_i * gens_i, or nullopt when f is
// outside the ideal. The empty generator list names the zero ideal.
std::optional<std::vector<Element>> in_ideal(const Element& f,
                                             const std::vector<Element>& gens,
                                             const SearchBudget& budget = {},
                                             MembershipStrategy strategy = MembershipStrategy::automatic);

} // namespace ringlab
