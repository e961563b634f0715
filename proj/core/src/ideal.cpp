#include "ringlab/ideal.hpp"

#include <cstdint>
#include <deque>
#include <string>

namespace ringlab {

namespace {

void verify_witness(const Element& f, const std::vector<Element>& gens,
                    const std::vector<Element>& coeffs) {
    Element acc = zero(f.ring());
    for (std::size_t i = 0; i < gens.size(); ++i) acc = add(acc, mul(coeffs[i], gens[i]));
    if (!(acc == f)) throw error("in_ideal: witness failed re-verification");
}

// g = gcd(a,b) with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::uint64_t mod_norm(std::int64_t v, std::uint64_t n) {
    std::int64_t m = v % static_cast<std::int64_t>(n);
    if (m < 0) m += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(m);
}

std::optional<std::vector<Element>> in_ideal_impl(const Element& f,
                                                  const std::vector<Element>& gens,
                                                  const SearchBudget& budget,
                                                  MembershipStrategy strategy);

// (g_1,...,g_k) mod n: the ideal is (gcd(n, g_1..g_k)); a Bezout chain
// expresses the gcd in the generators, scaling gives the witness.
std::optional<std::vector<Element>> zmod_congruence(const Element& f,
                                                    const std::vector<Element>& gens) {
    const RingPtr& R = f.ring();
    const std::uint64_t n = R->modulus();
    std::uint64_t d = n;
    std::vector<std::uint64_t> bezout(gens.size(), 0); // d = sum bezout_i * g_i (mod n)
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::int64_t x, y;
        std::int64_t g = ext_gcd(static_cast<std::int64_t>(d),
                                 static_cast<std::int64_t>(gens[i].value().residue()), x, y);
        // new_d = x*d + y*g_i; fold x into previous coefficients
        std::uint64_t xm = mod_norm(x, n);
        for (auto& c : bezout)
            c = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(c) * xm) % n);
        bezout[i] = mod_norm(y, n);
        d = static_cast<std::uint64_t>(g);
    }
    if (d == 0) d = n; // all generators and the modulus were zero mod n
    if (f.value().residue() % d != 0) return std::nullopt;
    const std::uint64_t scale = f.value().residue() / d;
    std::vector<Element> coeffs;
    coeffs.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(bezout[i]) * (scale % n)) % n);
        coeffs.push_back(make_element(R, Value(c)));
    }
    return coeffs;
}

std::optional<std::vector<Element>> prod_componentwise(const Element& f,
                                                       const std::vector<Element>& gens,
                                                       const SearchBudget& budget) {
    const RingPtr& R = f.ring();
    const auto& factors = R->factors();
    std::vector<std::vector<Value>> coeff_parts(gens.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
        Element fj(factors[j], f.value().parts()[j], detail::unchecked);
        std::vector<Element> gj;
        gj.reserve(gens.size());
        for (const auto& g : gens)
            gj.emplace_back(factors[j], g.value().parts()[j], detail::unchecked);
        auto sol = in_ideal_impl(fj, gj, budget, MembershipStrategy::automatic);
        if (!sol) return std::nullopt;
        for (std::size_t i = 0; i < gens.size(); ++i)
            coeff_parts[i].push_back((*sol)[i].value());
    }
    std::vector<Element> coeffs;
    coeffs.reserve(gens.size());
    for (auto& parts : coeff_parts)
        coeffs.push_back(Element(R, Value(std::move(parts)), detail::unchecked));
    return coeffs;
}

std::optional<std::vector<Element>> single_generator_scan(const Element& f, const Element& g,
                                                          const SearchBudget& budget) {
    const RingPtr& R = f.ring();
    const std::uint64_t m = checked_order(R, budget);
    for (std::uint64_t i = 0; i < m; ++i) {
        Element c = element_at(R, i);
        if (mul(c, g) == f) return std::vector<Element>{c};
    }
    return std::nullopt;
}

std::optional<std::vector<Element>> exhaustive_tuples(const Element& f,
                                                      const std::vector<Element>& gens,
                                                      const SearchBudget& budget) {
    const RingPtr& R = f.ring();
    const std::uint64_t m = checked_order(R, SearchBudget{UINT64_MAX, budget.max_membership_tuples});
    unsigned __int128 space = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        space *= m;
        if (space > budget.max_membership_tuples)
            throw budget_error("membership search space exceeds max_membership_tuples");
    }
    const std::size_t k = gens.size();
    std::vector<std::uint64_t> idx(k, 0);
    std::vector<Element> coeffs(k, zero(R));
    for (;;) {
        Element acc = zero(R);
        for (std::size_t i = 0; i < k; ++i) acc = add(acc, mul(coeffs[i], gens[i]));
        if (acc == f) return coeffs;
        // odometer, coordinate 0 fastest
        std::size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < m) {
                coeffs[pos] = element_at(R, idx[pos]);
                break;
            }
            idx[pos] = 0;
            coeffs[pos] = element_at(R, 0);
            ++pos;
        }
        if (pos == k) return std::nullopt;
    }
}

// Additive generators b such that every ring element is an integer
// combination of them: 1 for Z/n, slot copies for quotients and products.
void additive_basis_into(const RingPtr& R, std::vector<Element>& out) {
    switch (R->kind()) {
    case Ring::Kind::zmod:
        out.push_back(one(R));
        break;
    case Ring::Kind::quot: {
        std::vector<Element> base_basis;
        additive_basis_into(R->base(), base_basis);
        for (std::size_t slot = 0; slot < R->degree(); ++slot) {
            for (const auto& b : base_basis) {
                std::vector<Value> parts(R->degree(), zero(R->base()).value());
                parts[slot] = b.value();
                out.push_back(Element(R, Value(std::move(parts)), detail::unchecked));
            }
        }
        break;
    }
    case Ring::Kind::prod: {
        for (std::size_t j = 0; j < R->factors().size(); ++j) {
            std::vector<Element> fb;
            additive_basis_into(R->factors()[j], fb);
            for (const auto& b : fb) {
                std::vector<Value> parts;
                parts.reserve(R->factors().size());
                for (std::size_t l = 0; l < R->factors().size(); ++l)
                    parts.push_back(l == j ? b.value() : zero(R->factors()[l]).value());
                out.push_back(Element(R, Value(std::move(parts)), detail::unchecked));
            }
        }
        break;
    }
    }
}

// The ideal (g_1..g_k) is the additive subgroup generated by {b*g_i} for b
// in the additive basis. Breadth-first closure from 0 decides membership;
// the parent links reconstruct explicit coefficients.
std::optional<std::vector<Element>> additive_closure(const Element& f,
                                                     const std::vector<Element>& gens,
                                                     const SearchBudget& budget) {
    const RingPtr& R = f.ring();
    const std::uint64_t m = checked_order(R, budget);

    std::vector<Element> basis;
    additive_basis_into(R, basis);

    struct Edge {
        Element delta;
        std::size_t gen;
        std::size_t basis_index;
    };
    std::vector<Edge> edges;
    edges.reserve(gens.size() * basis.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t l = 0; l < basis.size(); ++l)
            edges.push_back(Edge{mul(basis[l], gens[i]), i, l});

    const std::uint64_t target = index_of(f);
    std::vector<std::int64_t> parent_state(m, -1);
    std::vector<std::int32_t> parent_edge(m, -1);
    std::deque<std::uint64_t> queue;
    const std::uint64_t start = 0; // index of zero
    parent_state[start] = static_cast<std::int64_t>(start);
    queue.push_back(start);
    while (!queue.empty() && parent_state[target] < 0) {
        std::uint64_t s = queue.front();
        queue.pop_front();
        Element es = element_at(R, s);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::uint64_t t = index_of(add(es, edges[e].delta));
            if (parent_state[t] >= 0) continue;
            parent_state[t] = static_cast<std::int64_t>(s);
            parent_edge[t] = static_cast<std::int32_t>(e);
            queue.push_back(t);
        }
    }
    if (parent_state[target] < 0) return std::nullopt;

    // multiplicity of each (generator, basis) edge along the path
    std::vector<std::vector<std::uint64_t>> counts(gens.size(),
                                                   std::vector<std::uint64_t>(basis.size(), 0));
    for (std::uint64_t s = target; s != start;) {
        const Edge& e = edges[static_cast<std::size_t>(parent_edge[s])];
        ++counts[e.gen][e.basis_index];
        s = static_cast<std::uint64_t>(parent_state[s]);
    }
    std::vector<Element> coeffs;
    coeffs.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Element c = zero(R);
        for (std::size_t l = 0; l < basis.size(); ++l)
            if (counts[i][l] > 0)
                c = add(c, mul(from_integer(R, counts[i][l]), basis[l]));
        coeffs.push_back(c);
    }
    return coeffs;
}

std::optional<std::vector<Element>> in_ideal_impl(const Element& f,
                                                  const std::vector<Element>& gens,
                                                  const SearchBudget& budget,
                                                  MembershipStrategy strategy) {
    const RingPtr& R = f.ring();
    if (gens.empty()) {
        // () is the zero ideal
        if (is_zero(f)) return std::vector<Element>{};
        return std::nullopt;
    }
    switch (strategy) {
    case MembershipStrategy::exhaustive:
        return exhaustive_tuples(f, gens, budget);
    case MembershipStrategy::additive:
        return additive_closure(f, gens, budget);
    case MembershipStrategy::automatic:
        break;
    }
    switch (R->kind()) {
    case Ring::Kind::zmod:
        return zmod_congruence(f, gens);
    case Ring::Kind::prod:
        return prod_componentwise(f, gens, budget);
    case Ring::Kind::quot:
        if (gens.size() == 1) return single_generator_scan(f, gens[0], budget);
        return additive_closure(f, gens, budget);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<Element>> in_ideal(const Element& f, const std::vector<Element>& gens,
                                             const SearchBudget& budget,
                                             MembershipStrategy strategy) {
    for (const auto& g : gens)
        if (!same_ring(g.ring(), f.ring()))
            throw ring_mismatch_error("in_ideal: generator from a different ring");
    auto result = in_ideal_impl(f, gens, budget, strategy);
    if (result) verify_witness(f, gens, *result);
    return result;
}

} // namespace ringlab
