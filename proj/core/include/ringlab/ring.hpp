#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/errors.hpp"

// Finite commutative rings with unity, built from three constructors:
//
//   Zmod(n)        integers mod n, n >= 2
//   Quot(B, m)     B[x]/(m) for a monic modulus m over B, deg m >= 1
//   Prod(R1..Rk)   direct product, componentwise operations
//
// Every element is kept in a canonical normal form (fully reduced residues,
// fixed-length little-endian coefficient vectors, one tuple slot per factor),
// so equality is structural and every invariant is decidable by comparison.
// All values are immutable after construction; operations are pure functions
// and safe to call concurrently.

namespace ringlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Element payload without its ring: a residue, a coefficient vector, or a
// factor tuple. The surrounding ring descriptor disambiguates the shape.
class Value {
  public:
    Value() : node_(std::uint64_t{0}) {}
    explicit Value(std::uint64_t residue) : node_(residue) {}
    explicit Value(std::vector<Value> parts) : node_(std::move(parts)) {}

    bool is_residue() const { return std::holds_alternative<std::uint64_t>(node_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(node_); }
    const std::vector<Value>& parts() const { return std::get<std::vector<Value>>(node_); }

    friend bool operator==(const Value&, const Value&) = default;

  private:
    std::variant<std::uint64_t, std::vector<Value>> node_;
};

class Ring : public std::enable_shared_from_this<Ring> {
  public:
    enum class Kind { zmod, quot, prod };

    static RingPtr zmod(std::uint64_t n);
    // modulus is little-endian over `base`, its last entry must equal one(base).
    static RingPtr quot(RingPtr base, std::vector<Value> modulus);
    static RingPtr prod(std::vector<RingPtr> factors);
    // A[z]/(z^n): quotient by the monic power z^n.
    static RingPtr series_trunc(RingPtr base, std::uint64_t n);

    Kind kind() const { return kind_; }
    // Saturates at UINT64_MAX when the true order does not fit; order_exact()
    // reports whether the value is trustworthy.
    std::uint64_t order() const { return order_; }
    bool order_exact() const { return order_exact_; }

    std::uint64_t modulus() const;                 // zmod only
    const RingPtr& base() const;                   // quot only
    const std::vector<Value>& poly_modulus() const; // quot only, size degree()+1
    std::size_t degree() const;                    // quot only
    const std::vector<RingPtr>& factors() const;   // prod only

    bool same_as(const Ring& other) const;

  private:
    Ring() = default;

    Kind kind_ = Kind::zmod;
    std::uint64_t order_ = 0;
    bool order_exact_ = true;
    std::uint64_t modulus_ = 0;
    RingPtr base_;
    std::vector<Value> poly_modulus_;
    std::vector<RingPtr> factors_;
};

// Structural ring equality with a pointer fast path.
bool same_ring(const RingPtr& a, const RingPtr& b);

namespace detail {
struct unchecked_t {};
inline constexpr unchecked_t unchecked{};
} // namespace detail

// A value of a specific ring. Equality requires equal descriptors and equal
// normal forms.
class Element {
  public:
    Element() = default;

    Element(RingPtr ring, Value value, detail::unchecked_t)
        : ring_(std::move(ring)), value_(std::move(value)) {}

    const RingPtr& ring() const { return ring_; }
    const Value& value() const { return value_; }
    bool valid() const { return ring_ != nullptr; }

    friend bool operator==(const Element& a, const Element& b) {
        return same_ring(a.ring_, b.ring_) && a.value_ == b.value_;
    }

  private:
    RingPtr ring_;
    Value value_;
};

// Validating constructor: checks shape against the descriptor and that the
// normal-form invariants hold (residues reduced, coefficient vectors of
// exactly deg(modulus) entries, one tuple slot per factor).
Element make_element(const RingPtr& ring, Value value);
bool is_canonical(const Ring& ring, const Value& value);

Element zero(const RingPtr& ring);
Element one(const RingPtr& ring);
bool is_zero(const Element& a);
bool is_one(const Element& a);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element neg(const Element& a);
Element pow(const Element& a, std::uint64_t e);
// n-fold sum of one(), i.e. the canonical image of an integer.
Element from_integer(const RingPtr& ring, std::uint64_t n);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator-(const Element& a) { return neg(a); }

// Deterministic enumeration. Index i maps to the element whose normal form
// is the little-endian positional decomposition of i: residues count up,
// coefficient slot 0 varies fastest, the first product factor varies fastest.
Element element_at(const RingPtr& ring, std::uint64_t index);
std::uint64_t index_of(const Element& a);

// Throws budget_error unless order(ring) is exact and within the budget.
std::uint64_t checked_order(const RingPtr& ring, const SearchBudget& budget);

// All elements of the ring in enumeration order.
std::vector<Element> all_elements(const RingPtr& ring, const SearchBudget& budget = {});

// Multiplicative inverse if `a` is a unit. Extended-gcd fast path for Zmod,
// componentwise for products, enumeration scan otherwise. Inverses in a
// finite commutative ring are unique, so the route cannot change the answer.
std::optional<Element> is_unit(const Element& a, const SearchBudget& budget = {});

} // namespace ringlab
