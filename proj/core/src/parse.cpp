#include "ringlab/parse.hpp"

#include <cctype>

namespace ringlab {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw parse_error("unexpected end of input", pos);
        return text[pos];
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    std::uint64_t nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected a number", pos);
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (UINT64_MAX - d) / 10) throw parse_error("number too large", pos);
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }
};

// Constant embedding of a base element into a quotient ring.
Element embed_const(const RingPtr& quotient, const Element& base_elem) {
    std::vector<Value> parts(quotient->degree(), zero(quotient->base()).value());
    parts[0] = base_elem.value();
    return Element(quotient, Value(std::move(parts)), detail::unchecked);
}

// The class of the indeterminate. For degree 1 it reduces to -m0.
Element indeterminate(const RingPtr& quotient) {
    if (quotient->degree() >= 2) {
        std::vector<Value> parts(quotient->degree(), zero(quotient->base()).value());
        parts[1] = one(quotient->base()).value();
        return Element(quotient, Value(std::move(parts)), detail::unchecked);
    }
    Element m0(quotient->base(), quotient->poly_modulus()[0], detail::unchecked);
    return neg(embed_const(quotient, m0));
}

Element parse_elem(Cursor& c, const RingPtr& ring);

Element parse_coeffs_elem(Cursor& c, const RingPtr& ring) {
    if (ring->kind() != Ring::Kind::quot)
        throw parse_error("coefficient list only makes sense in a quotient ring", c.pos);
    c.expect('[');
    std::vector<Element> coeffs;
    coeffs.push_back(parse_elem(c, ring->base()));
    while (c.try_consume(',')) coeffs.push_back(parse_elem(c, ring->base()));
    c.expect(']');
    // Horner: reduction by the modulus comes free from quotient multiplication.
    Element z = indeterminate(ring);
    Element acc = zero(ring);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = add(mul(acc, z), embed_const(ring, *it));
    return acc;
}

Element parse_elem(Cursor& c, const RingPtr& ring) {
    char ch = c.peek();
    if (ch == 'z') {
        if (ring->kind() != Ring::Kind::quot)
            throw parse_error("'z' only names the indeterminate of a quotient ring", c.pos);
        ++c.pos;
        return indeterminate(ring);
    }
    if (ch == '[') return parse_coeffs_elem(c, ring);
    if (ch == '(') {
        if (ring->kind() != Ring::Kind::prod)
            throw parse_error("tuple literal only makes sense in a product ring", c.pos);
        c.expect('(');
        std::vector<Value> parts;
        parts.reserve(ring->factors().size());
        parts.push_back(parse_elem(c, ring->factors()[0]).value());
        std::size_t i = 1;
        while (c.try_consume(',')) {
            if (i >= ring->factors().size())
                throw parse_error("too many tuple entries", c.pos);
            parts.push_back(parse_elem(c, ring->factors()[i]).value());
            ++i;
        }
        c.expect(')');
        if (i != ring->factors().size())
            throw parse_error("tuple entry count does not match factor count", c.pos);
        return Element(ring, Value(std::move(parts)), detail::unchecked);
    }
    return from_integer(ring, c.nat());
}

RingPtr parse_ring(Cursor& c) {
    char ch = c.peek();
    if (ch == 'Z') {
        ++c.pos;
        c.expect('/');
        std::size_t at = c.pos;
        std::uint64_t n = c.nat();
        if (n < 2) throw parse_error("Z/n needs n >= 2", at);
        return Ring::zmod(n);
    }
    if (ch == 'Q') {
        ++c.pos;
        c.expect('(');
        RingPtr base = parse_ring(c);
        c.expect(',');
        std::size_t at = c.pos;
        c.expect('[');
        // Modulus entries are base elements; the literal fixes the degree.
        std::vector<Value> modulus;
        modulus.push_back(parse_elem(c, base).value());
        while (c.try_consume(',')) modulus.push_back(parse_elem(c, base).value());
        c.expect(']');
        if (modulus.size() < 2) throw parse_error("modulus must have degree >= 1", at);
        if (!(Element(base, modulus.back(), detail::unchecked) == one(base)))
            throw parse_error("modulus must be monic (last entry must be one)", at);
        c.expect(')');
        return Ring::quot(std::move(base), std::move(modulus));
    }
    if (ch == 'P') {
        ++c.pos;
        c.expect('(');
        std::vector<RingPtr> factors;
        factors.push_back(parse_ring(c));
        while (c.try_consume(',')) factors.push_back(parse_ring(c));
        c.expect(')');
        if (factors.size() < 2) throw parse_error("product needs at least two factors", c.pos);
        return Ring::prod(std::move(factors));
    }
    if (ch == 'S') {
        ++c.pos;
        c.expect('(');
        RingPtr base = parse_ring(c);
        c.expect(',');
        std::size_t at = c.pos;
        std::uint64_t n = c.nat();
        if (n < 1) throw parse_error("S(A,N) needs N >= 1", at);
        c.expect(')');
        return Ring::series_trunc(std::move(base), n);
    }
    throw parse_error("expected a ring spec (Z/, Q(, P(, S()", c.pos);
}

} // namespace

RingPtr parse_ring_spec(std::string_view text, const SearchBudget& budget) {
    Cursor c{text};
    RingPtr r = parse_ring(c);
    if (!c.eof()) throw parse_error("trailing input after ring spec", c.pos);
    if (!r->order_exact() || r->order() > budget.max_ring_order)
        throw budget_error("ring order " +
                           (r->order_exact() ? std::to_string(r->order())
                                             : std::string("(overflow)")) +
                           " exceeds budget max_ring_order " +
                           std::to_string(budget.max_ring_order));
    return r;
}

Element parse_element(std::string_view text, const RingPtr& ring) {
    Cursor c{text};
    Element e = parse_elem(c, ring);
    if (!c.eof()) throw parse_error("trailing input after element literal", c.pos);
    return e;
}

std::vector<std::pair<Element, Element>> parse_pair_list(std::string_view text,
                                                         const RingPtr& ring) {
    Cursor c{text};
    c.expect('[');
    std::vector<std::pair<Element, Element>> out;
    do {
        c.expect('(');
        Element f = parse_elem(c, ring);
        c.expect(',');
        Element r = parse_elem(c, ring);
        c.expect(')');
        out.emplace_back(std::move(f), std::move(r));
    } while (c.try_consume(','));
    c.expect(']');
    if (!c.eof()) throw parse_error("trailing input after pair list", c.pos);
    return out;
}

std::string to_spec(const Ring& ring) {
    switch (ring.kind()) {
    case Ring::Kind::zmod:
        return "Z/" + std::to_string(ring.modulus());
    case Ring::Kind::quot: {
        std::string s = "Q(" + to_spec(*ring.base()) + ",[";
        for (std::size_t i = 0; i < ring.poly_modulus().size(); ++i) {
            if (i) s += ',';
            s += to_literal(Element(ring.base(), ring.poly_modulus()[i], detail::unchecked));
        }
        s += "])";
        return s;
    }
    case Ring::Kind::prod: {
        std::string s = "P(";
        for (std::size_t i = 0; i < ring.factors().size(); ++i) {
            if (i) s += ',';
            s += to_spec(*ring.factors()[i]);
        }
        s += ')';
        return s;
    }
    }
    return {};
}

std::string to_literal(const Element& a) {
    const Ring& R = *a.ring();
    switch (R.kind()) {
    case Ring::Kind::zmod:
        return std::to_string(a.value().residue());
    case Ring::Kind::quot: {
        std::string s = "[";
        for (std::size_t i = 0; i < R.degree(); ++i) {
            if (i) s += ',';
            s += to_literal(Element(R.base(), a.value().parts()[i], detail::unchecked));
        }
        s += ']';
        return s;
    }
    case Ring::Kind::prod: {
        std::string s = "(";
        for (std::size_t i = 0; i < R.factors().size(); ++i) {
            if (i) s += ',';
            s += to_literal(Element(R.factors()[i], a.value().parts()[i], detail::unchecked));
        }
        s += ')';
        return s;
    }
    }
    return {};
}

} // namespace ringlab
