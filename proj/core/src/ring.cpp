#include "ringlab/ring.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ringlab {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, bool& exact) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > UINT64_MAX) {
        exact = false;
        return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t a, std::uint64_t e, bool& exact) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r = sat_mul(r, a, exact);
        if (!exact) return UINT64_MAX;
    }
    return r;
}

// ---- raw value arithmetic, recursing over the descriptor tree ----

Value v_zero(const Ring& R) {
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return Value(std::uint64_t{0});
    case Ring::Kind::quot: {
        std::vector<Value> parts(R.degree(), v_zero(*R.base()));
        return Value(std::move(parts));
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (const auto& f : R.factors()) parts.push_back(v_zero(*f));
        return Value(std::move(parts));
    }
    }
    return Value();
}

Value v_one(const Ring& R) {
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return Value(std::uint64_t{1});
    case Ring::Kind::quot: {
        std::vector<Value> parts(R.degree(), v_zero(*R.base()));
        parts[0] = v_one(*R.base());
        return Value(std::move(parts));
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (const auto& f : R.factors()) parts.push_back(v_one(*f));
        return Value(std::move(parts));
    }
    }
    return Value();
}

Value v_add(const Ring& R, const Value& a, const Value& b) {
    switch (R.kind()) {
    case Ring::Kind::zmod: {
        std::uint64_t n = R.modulus();
        unsigned __int128 s = static_cast<unsigned __int128>(a.residue()) + b.residue();
        return Value(static_cast<std::uint64_t>(s % n));
    }
    case Ring::Kind::quot: {
        std::vector<Value> parts;
        parts.reserve(R.degree());
        for (std::size_t i = 0; i < R.degree(); ++i)
            parts.push_back(v_add(*R.base(), a.parts()[i], b.parts()[i]));
        return Value(std::move(parts));
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (std::size_t i = 0; i < R.factors().size(); ++i)
            parts.push_back(v_add(*R.factors()[i], a.parts()[i], b.parts()[i]));
        return Value(std::move(parts));
    }
    }
    return Value();
}

Value v_neg(const Ring& R, const Value& a) {
    switch (R.kind()) {
    case Ring::Kind::zmod: {
        std::uint64_t n = R.modulus();
        return Value(a.residue() == 0 ? 0 : n - a.residue());
    }
    case Ring::Kind::quot: {
        std::vector<Value> parts;
        parts.reserve(R.degree());
        for (std::size_t i = 0; i < R.degree(); ++i)
            parts.push_back(v_neg(*R.base(), a.parts()[i]));
        return Value(std::move(parts));
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (std::size_t i = 0; i < R.factors().size(); ++i)
            parts.push_back(v_neg(*R.factors()[i], a.parts()[i]));
        return Value(std::move(parts));
    }
    }
    return Value();
}

Value v_sub(const Ring& R, const Value& a, const Value& b) { return v_add(R, a, v_neg(R, b)); }

Value v_mul(const Ring& R, const Value& a, const Value& b);

// Schoolbook multiply followed by reduction by the monic modulus. Because
// the leading coefficient is one, reduction needs no division in the base.
Value v_mul_quot(const Ring& R, const Value& a, const Value& b) {
    const Ring& B = *R.base();
    const std::size_t d = R.degree();
    const std::vector<Value>& m = R.poly_modulus();

    const Value zero_b = v_zero(B);
    std::vector<Value> prod(2 * d - 1, zero_b);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.parts()[i] == zero_b) continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = v_add(B, prod[i + j], v_mul(B, a.parts()[i], b.parts()[j]));
    }
    for (std::size_t i = 2 * d - 2; i >= d && i < prod.size(); --i) {
        if (!(prod[i] == zero_b)) {
            const Value lead = prod[i];
            for (std::size_t j = 0; j < d; ++j)
                prod[i - d + j] = v_sub(B, prod[i - d + j], v_mul(B, lead, m[j]));
        }
        if (i == d) break;
    }
    prod.resize(d);
    return Value(std::move(prod));
}

Value v_mul(const Ring& R, const Value& a, const Value& b) {
    switch (R.kind()) {
    case Ring::Kind::zmod: {
        std::uint64_t n = R.modulus();
        unsigned __int128 p = static_cast<unsigned __int128>(a.residue()) * b.residue();
        return Value(static_cast<std::uint64_t>(p % n));
    }
    case Ring::Kind::quot:
        return v_mul_quot(R, a, b);
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (std::size_t i = 0; i < R.factors().size(); ++i)
            parts.push_back(v_mul(*R.factors()[i], a.parts()[i], b.parts()[i]));
        return Value(std::move(parts));
    }
    }
    return Value();
}

Value v_at(const Ring& R, std::uint64_t index) {
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return Value(index);
    case Ring::Kind::quot: {
        const std::uint64_t bo = R.base()->order();
        std::vector<Value> parts;
        parts.reserve(R.degree());
        for (std::size_t i = 0; i < R.degree(); ++i) {
            parts.push_back(v_at(*R.base(), index % bo));
            index /= bo;
        }
        return Value(std::move(parts));
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R.factors().size());
        for (const auto& f : R.factors()) {
            parts.push_back(v_at(*f, index % f->order()));
            index /= f->order();
        }
        return Value(std::move(parts));
    }
    }
    return Value();
}

std::uint64_t v_index(const Ring& R, const Value& a) {
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return a.residue();
    case Ring::Kind::quot: {
        const std::uint64_t bo = R.base()->order();
        std::uint64_t idx = 0, scale = 1;
        for (std::size_t i = 0; i < R.degree(); ++i) {
            idx += scale * v_index(*R.base(), a.parts()[i]);
            scale *= bo;
        }
        return idx;
    }
    case Ring::Kind::prod: {
        std::uint64_t idx = 0, scale = 1;
        for (std::size_t i = 0; i < R.factors().size(); ++i) {
            idx += scale * v_index(*R.factors()[i], a.parts()[i]);
            scale *= R.factors()[i]->order();
        }
        return idx;
    }
    }
    return 0;
}

bool v_canonical(const Ring& R, const Value& a) {
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return a.is_residue() && a.residue() < R.modulus();
    case Ring::Kind::quot: {
        if (a.is_residue() || a.parts().size() != R.degree()) return false;
        for (const auto& p : a.parts())
            if (!v_canonical(*R.base(), p)) return false;
        return true;
    }
    case Ring::Kind::prod: {
        if (a.is_residue() || a.parts().size() != R.factors().size()) return false;
        for (std::size_t i = 0; i < R.factors().size(); ++i)
            if (!v_canonical(*R.factors()[i], a.parts()[i])) return false;
        return true;
    }
    }
    return false;
}

void require_same_ring(const Element& a, const Element& b, const char* op) {
    if (!same_ring(a.ring(), b.ring()))
        throw ring_mismatch_error(std::string("ring mismatch in ") + op);
}

// Extended gcd: returns g = gcd(a, b) and x with a*x == g (mod b).
std::uint64_t ext_gcd_mod(std::uint64_t a, std::uint64_t b, std::uint64_t& x_out) {
    std::int64_t x0 = 1, x1 = 0;
    std::uint64_t r0 = a, r1 = b;
    const std::uint64_t n = b;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - static_cast<std::int64_t>(q) * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    std::int64_t xm = x0 % static_cast<std::int64_t>(n);
    if (xm < 0) xm += static_cast<std::int64_t>(n);
    x_out = static_cast<std::uint64_t>(xm);
    return r0;
}

} // namespace

// ---- Ring constructors ----

RingPtr Ring::zmod(std::uint64_t n) {
    if (n < 2) throw error("Zmod modulus must be at least 2");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::zmod;
    r->modulus_ = n;
    r->order_ = n;
    return r;
}

RingPtr Ring::quot(RingPtr base, std::vector<Value> modulus) {
    if (!base) throw error("quotient needs a base ring");
    if (modulus.size() < 2) throw error("quotient modulus must have degree at least 1");
    for (const auto& c : modulus)
        if (!v_canonical(*base, c)) throw error("quotient modulus coefficient not in base ring");
    if (!(modulus.back() == v_one(*base))) throw error("quotient modulus must be monic");

    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::quot;
    r->base_ = std::move(base);
    r->poly_modulus_ = std::move(modulus);
    bool exact = r->base_->order_exact();
    r->order_ = sat_pow(r->base_->order(), r->poly_modulus_.size() - 1, exact);
    r->order_exact_ = exact;
    return r;
}

RingPtr Ring::prod(std::vector<RingPtr> factors) {
    if (factors.empty()) throw error("product needs at least one factor");
    for (const auto& f : factors)
        if (!f) throw error("product factor is null");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::prod;
    r->factors_ = std::move(factors);
    bool exact = true;
    std::uint64_t o = 1;
    for (const auto& f : r->factors_) {
        if (!f->order_exact()) exact = false;
        o = sat_mul(o, f->order(), exact);
    }
    r->order_ = o;
    r->order_exact_ = exact;
    return r;
}

RingPtr Ring::series_trunc(RingPtr base, std::uint64_t n) {
    if (n < 1) throw error("series truncation must be at least 1");
    if (!base) throw error("series truncation needs a base ring");
    std::vector<Value> m(n + 1, v_zero(*base));
    m[n] = v_one(*base);
    return quot(std::move(base), std::move(m));
}

std::uint64_t Ring::modulus() const {
    if (kind_ != Kind::zmod) throw error("modulus(): not a Zmod ring");
    return modulus_;
}

const RingPtr& Ring::base() const {
    if (kind_ != Kind::quot) throw error("base(): not a quotient ring");
    return base_;
}

const std::vector<Value>& Ring::poly_modulus() const {
    if (kind_ != Kind::quot) throw error("poly_modulus(): not a quotient ring");
    return poly_modulus_;
}

std::size_t Ring::degree() const {
    if (kind_ != Kind::quot) throw error("degree(): not a quotient ring");
    return poly_modulus_.size() - 1;
}

const std::vector<RingPtr>& Ring::factors() const {
    if (kind_ != Kind::prod) throw error("factors(): not a product ring");
    return factors_;
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || order_ != other.order_) return false;
    switch (kind_) {
    case Kind::zmod:
        return modulus_ == other.modulus_;
    case Kind::quot:
        return poly_modulus_ == other.poly_modulus_ && base_->same_as(*other.base_);
    case Kind::prod: {
        if (factors_.size() != other.factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (!factors_[i]->same_as(*other.factors_[i])) return false;
        return true;
    }
    }
    return false;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

// ---- Element operations ----

Element make_element(const RingPtr& ring, Value value) {
    if (!ring) throw error("make_element: null ring");
    if (!v_canonical(*ring, value))
        throw error("make_element: value is not a canonical form for this ring");
    return Element(ring, std::move(value), detail::unchecked);
}

bool is_canonical(const Ring& ring, const Value& value) { return v_canonical(ring, value); }

Element zero(const RingPtr& ring) { return Element(ring, v_zero(*ring), detail::unchecked); }
Element one(const RingPtr& ring) { return Element(ring, v_one(*ring), detail::unchecked); }

bool is_zero(const Element& a) { return a.value() == v_zero(*a.ring()); }
bool is_one(const Element& a) { return a.value() == v_one(*a.ring()); }

Element add(const Element& a, const Element& b) {
    require_same_ring(a, b, "add");
    return Element(a.ring(), v_add(*a.ring(), a.value(), b.value()), detail::unchecked);
}

Element sub(const Element& a, const Element& b) {
    require_same_ring(a, b, "sub");
    return Element(a.ring(), v_sub(*a.ring(), a.value(), b.value()), detail::unchecked);
}

Element mul(const Element& a, const Element& b) {
    require_same_ring(a, b, "mul");
    return Element(a.ring(), v_mul(*a.ring(), a.value(), b.value()), detail::unchecked);
}

Element neg(const Element& a) {
    return Element(a.ring(), v_neg(*a.ring(), a.value()), detail::unchecked);
}

Element pow(const Element& a, std::uint64_t e) {
    Element acc = one(a.ring());
    Element base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

Element from_integer(const RingPtr& ring, std::uint64_t n) {
    // double-and-add on the additive group
    Element acc = zero(ring);
    Element step = one(ring);
    while (n > 0) {
        if (n & 1) acc = add(acc, step);
        n >>= 1;
        if (n) step = add(step, step);
    }
    return acc;
}

Element element_at(const RingPtr& ring, std::uint64_t index) {
    if (!ring->order_exact() || index >= ring->order())
        throw error("element_at: index out of range");
    return Element(ring, v_at(*ring, index), detail::unchecked);
}

std::uint64_t index_of(const Element& a) { return v_index(*a.ring(), a.value()); }

std::uint64_t checked_order(const RingPtr& ring, const SearchBudget& budget) {
    if (!ring->order_exact() || ring->order() > budget.max_ring_order)
        throw budget_error("ring order " +
                           (ring->order_exact() ? std::to_string(ring->order())
                                                : std::string("(overflow)")) +
                           " exceeds budget max_ring_order " +
                           std::to_string(budget.max_ring_order));
    return ring->order();
}

std::vector<Element> all_elements(const RingPtr& ring, const SearchBudget& budget) {
    const std::uint64_t n = checked_order(ring, budget);
    std::vector<Element> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(ring, i));
    return out;
}

std::optional<Element> is_unit(const Element& a, const SearchBudget& budget) {
    const RingPtr& R = a.ring();
    checked_order(R, budget);
    switch (R->kind()) {
    case Ring::Kind::zmod: {
        std::uint64_t x;
        std::uint64_t g = ext_gcd_mod(a.value().residue(), R->modulus(), x);
        if (g != 1) return std::nullopt;
        return Element(R, Value(x), detail::unchecked);
    }
    case Ring::Kind::prod: {
        std::vector<Value> parts;
        parts.reserve(R->factors().size());
        for (std::size_t i = 0; i < R->factors().size(); ++i) {
            Element comp(R->factors()[i], a.value().parts()[i], detail::unchecked);
            auto inv = is_unit(comp, budget);
            if (!inv) return std::nullopt;
            parts.push_back(inv->value());
        }
        return Element(R, Value(std::move(parts)), detail::unchecked);
    }
    case Ring::Kind::quot: {
        const Element e1 = one(R);
        for (std::uint64_t i = 0; i < R->order(); ++i) {
            Element cand = element_at(R, i);
            if (mul(a, cand) == e1) return cand;
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

} // namespace ringlab
