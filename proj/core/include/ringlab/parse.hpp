#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/ring.hpp"

// Text forms. Whitespace is insignificant everywhere.
//
//   ring   := "Z/" NAT
//           | "Q(" ring "," coeffs ")"        quotient by a monic modulus
//           | "P(" ring ("," ring)+ ")"       direct product
//           | "S(" ring "," NAT ")"           sugar: Q(ring,[0,...,0,1]) = ring[z]/(z^N)
//   coeffs := "[" elem ("," elem)* "]"        little-endian by degree
//   elem   := NAT                             the image of an integer (n times one)
//           | coeffs                          quotient element; reduced by the modulus,
//                                             short lists are padded with zeros
//           | "(" elem ("," elem)* ")"        product element, one entry per factor
//           | "z"                             the class of the indeterminate (quotient rings)
//
// A modulus literal fixes the degree: its last entry must be the base ring's
// one. Residue literals are reduced into canonical range.

namespace ringlab {

RingPtr parse_ring_spec(std::string_view text, const SearchBudget& budget = {});
Element parse_element(std::string_view text, const RingPtr& ring);

// "[(f1,r1),(f2,r2),...]" with elem literals over `ring`.
std::vector<std::pair<Element, Element>> parse_pair_list(std::string_view text,
                                                         const RingPtr& ring);

// Canonical printers; parse(print(x)) reproduces x exactly. Rings always
// print in Z/, Q(), P() form (S() is accepted on input only).
std::string to_spec(const Ring& ring);
std::string to_literal(const Element& a);

} // namespace ringlab
