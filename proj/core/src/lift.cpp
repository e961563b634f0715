#include "ringlab/lift.hpp"

#include <algorithm>

namespace ringlab {

namespace {

Element coeff_at(const TruncatedRing& tr, const Element& a, std::size_t k) {
    return Element(tr.coeff_ring, a.value().parts()[k], detail::unchecked);
}

Element from_layers(const TruncatedRing& tr, const std::vector<Element>& layers) {
    std::vector<Value> parts;
    parts.reserve(tr.truncation);
    for (const auto& l : layers) parts.push_back(l.value());
    return Element(tr.carrier, Value(std::move(parts)), detail::unchecked);
}

void require_carrier(const TruncatedRing& tr, const Element& a, const char* what) {
    if (!same_ring(a.ring(), tr.carrier))
        throw ring_mismatch_error(std::string(what) + ": element not in the carrier");
}

} // namespace

TruncatedRing make_truncated_ring(RingPtr coeff_ring, std::uint64_t truncation) {
    if (!coeff_ring) throw error("make_truncated_ring: null coefficient ring");
    if (!coeff_ring->order_exact()) throw error("make_truncated_ring: coefficient ring too large");
    if (truncation < 2) throw error("make_truncated_ring: truncation must be at least 2");
    TruncatedRing tr;
    tr.coeff_ring = coeff_ring;
    tr.truncation = truncation;
    tr.carrier = Ring::series_trunc(std::move(coeff_ring), truncation);
    return tr;
}

TruncatedRing truncated_from_carrier(RingPtr carrier) {
    if (!carrier || carrier->kind() != Ring::Kind::quot)
        throw error("truncated_from_carrier: carrier must be a quotient ring");
    const std::size_t n = carrier->degree();
    if (n < 2) throw error("truncated_from_carrier: truncation must be at least 2");
    const Value zero_b = zero(carrier->base()).value();
    for (std::size_t i = 0; i < n; ++i)
        if (!(carrier->poly_modulus()[i] == zero_b))
            throw error("truncated_from_carrier: modulus is not a power of z");
    TruncatedRing tr;
    tr.coeff_ring = carrier->base();
    tr.truncation = n;
    tr.carrier = std::move(carrier);
    return tr;
}

Element z_generator(const TruncatedRing& tr) {
    std::vector<Value> parts(tr.truncation, zero(tr.coeff_ring).value());
    parts[1] = one(tr.coeff_ring).value();
    return Element(tr.carrier, Value(std::move(parts)), detail::unchecked);
}

std::uint64_t z_order(const TruncatedRing& tr, const Element& a) {
    require_carrier(tr, a, "z_order");
    const Value zero_a = zero(tr.coeff_ring).value();
    for (std::uint64_t k = 0; k < tr.truncation; ++k)
        if (!(a.value().parts()[k] == zero_a)) return k;
    return tr.truncation;
}

Element truncate_to(const TruncatedRing& smaller, const Element& a) {
    if (a.value().parts().size() < smaller.truncation)
        throw error("truncate_to: source truncation is smaller than the target");
    std::vector<Value> parts(a.value().parts().begin(),
                             a.value().parts().begin() + smaller.truncation);
    return Element(smaller.carrier, Value(std::move(parts)), detail::unchecked);
}

LiftProblem make_lift_problem(TruncatedRing tr, std::vector<std::pair<Element, Element>> pairs,
                              Element target, std::uint64_t stages) {
    if (pairs.empty()) throw error("lift problem needs at least one generator pair");
    if (stages + 1 > tr.truncation)
        throw error("lift problem needs stages + 1 <= truncation");
    require_carrier(tr, target, "lift target");
    LiftProblem p;
    const Element z = z_generator(tr);
    for (auto& [f, r] : pairs) {
        require_carrier(tr, f, "lift pair");
        require_carrier(tr, r, "lift pair");
        p.generators.push_back(add(f, mul(r, z)));
    }
    p.ring = std::move(tr);
    p.pairs = std::move(pairs);
    p.target = std::move(target);
    p.stages = stages;
    return p;
}

std::optional<std::vector<Element>> one_step_express(const TruncatedRing& tr, const Element& u,
                                                     const std::vector<Element>& gens,
                                                     const SearchBudget& budget) {
    require_carrier(tr, u, "one_step_express");
    for (const auto& g : gens) require_carrier(tr, g, "one_step_express");
    if (gens.empty()) {
        if (is_zero(u)) return std::vector<Element>{};
        return std::nullopt;
    }

    const RingPtr& A = tr.coeff_ring;
    const std::size_t n = gens.size();
    const std::uint64_t N = tr.truncation;
    const std::uint64_t a_order = A->order();

    unsigned __int128 layer_space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        layer_space *= a_order;
        if (layer_space * N > budget.max_membership_tuples)
            throw budget_error("one_step_express: layer search space exceeds budget");
    }

    // layer tuples in enumeration order (coordinate 1 fastest), bucketed by
    // the value of sum x_i * (a_i)_0
    std::vector<Element> const_terms;
    const_terms.reserve(n);
    for (const auto& g : gens) const_terms.push_back(coeff_at(tr, g, 0));
    std::vector<std::vector<std::vector<Element>>> bucket(a_order);
    {
        std::vector<std::uint64_t> idx(n, 0);
        std::vector<Element> x(n, zero(A));
        for (;;) {
            Element s = zero(A);
            for (std::size_t i = 0; i < n; ++i) s = add(s, mul(x[i], const_terms[i]));
            bucket[index_of(s)].push_back(x);
            std::size_t pos = 0;
            while (pos < n) {
                if (++idx[pos] < a_order) {
                    x[pos] = element_at(A, idx[pos]);
                    break;
                }
                idx[pos] = 0;
                x[pos] = element_at(A, 0);
                ++pos;
            }
            if (pos == n) break;
        }
    }

    // glayers[i][k]: chosen layer-k coefficient of g_i
    std::vector<std::vector<Element>> glayers(n, std::vector<Element>(N, zero(A)));
    std::uint64_t visited = 0;

    // rhs of the layer-k equation given all layers below k
    auto layer_rhs = [&](std::uint64_t k) {
        Element rhs = coeff_at(tr, u, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < k; ++j)
                rhs = sub(rhs, mul(glayers[i][j], coeff_at(tr, gens[i], k - j)));
        return rhs;
    };

    auto dfs = [&](auto&& self, std::uint64_t k) -> bool {
        if (k == N) return true;
        const auto& candidates = bucket[index_of(layer_rhs(k))];
        for (const auto& x : candidates) {
            if (++visited > budget.max_membership_tuples)
                throw budget_error("one_step_express: visited candidates exceed budget");
            for (std::size_t i = 0; i < n; ++i) glayers[i][k] = x[i];
            if (self(self, k + 1)) return true;
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;

    std::vector<Element> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(from_layers(tr, glayers[i]));

    // the assembled solution must reproduce u exactly
    Element acc = zero(tr.carrier);
    for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(out[i], gens[i]));
    if (!(acc == u)) throw error("one_step_express: solution failed re-verification");
    return out;
}

LiftTrace adic_lift(const LiftProblem& problem, const SearchBudget& budget) {
    const TruncatedRing& tr = problem.ring;
    const std::size_t n = problem.pairs.size();
    const Element z = z_generator(tr);

    LiftTrace trace;
    trace.problem = problem;
    trace.remainders.push_back(problem.target);

    std::vector<Element> sums(n, zero(tr.carrier));
    for (std::uint64_t t = 0; t <= problem.stages; ++t) {
        const Element& u = trace.remainders.back();
        auto sol = one_step_express(tr, u, problem.generators, budget);
        if (!sol)
            throw stage_unsolvable(t, "stage " + std::to_string(t) +
                                          ": remainder is not expressible in the generators");
        Element next = zero(tr.carrier);
        for (std::size_t i = 0; i < n; ++i) next = add(next, mul((*sol)[i], problem.pairs[i].second));

        const Element zt = pow(z, t);
        Element residual = problem.target;
        for (std::size_t i = 0; i < n; ++i) {
            sums[i] = add(sums[i], mul(zt, (*sol)[i]));
            residual = sub(residual, mul(sums[i], problem.pairs[i].first));
        }
        const std::uint64_t order = z_order(tr, residual);
        if (order < t + 1)
            throw error("adic_lift: residual order dropped below the stage bound");

        trace.stage_coefficients.push_back(std::move(*sol));
        trace.remainders.push_back(std::move(next));
        trace.partial_sums.push_back(sums);
        trace.residuals.push_back(std::move(residual));
        trace.residual_orders.push_back(order);
    }
    return trace;
}

TraceCheck verify_trace(const LiftTrace& trace) {
    const TruncatedRing& tr = trace.problem.ring;
    const std::size_t n = trace.problem.pairs.size();
    const std::uint64_t T = trace.problem.stages;
    auto fail = [](std::uint64_t stage, std::string what) {
        return TraceCheck{false, stage, std::move(what)};
    };

    if (trace.stage_coefficients.size() != T + 1 || trace.remainders.size() != T + 2 ||
        trace.partial_sums.size() != T + 1 || trace.residuals.size() != T + 1 ||
        trace.residual_orders.size() != T + 1)
        return fail(0, "trace shape does not match the stage count");
    if (!(trace.remainders[0] == trace.problem.target))
        return fail(0, "first remainder is not the target");

    const Element z = z_generator(tr);
    std::vector<Element> sums(n, zero(tr.carrier));
    for (std::uint64_t t = 0; t <= T; ++t) {
        const auto& g = trace.stage_coefficients[t];
        if (g.size() != n) return fail(t, "coefficient list has the wrong width");

        Element expressed = zero(tr.carrier);
        for (std::size_t i = 0; i < n; ++i)
            expressed = add(expressed, mul(g[i], trace.problem.generators[i]));
        if (!(expressed == trace.remainders[t])) return fail(t, "stage identity violated");

        Element next = zero(tr.carrier);
        for (std::size_t i = 0; i < n; ++i)
            next = add(next, mul(g[i], trace.problem.pairs[i].second));
        if (!(next == trace.remainders[t + 1])) return fail(t, "next remainder mismatch");

        const Element zt = pow(z, t);
        Element residual = trace.problem.target;
        for (std::size_t i = 0; i < n; ++i) {
            sums[i] = add(sums[i], mul(zt, g[i]));
            if (!(sums[i] == trace.partial_sums[t][i])) return fail(t, "partial sum mismatch");
            residual = sub(residual, mul(sums[i], trace.problem.pairs[i].first));
        }
        if (!(residual == trace.residuals[t])) return fail(t, "residual mismatch");

        // closed form: target = sum H_(t,i) f_i + z^(t+1) u_(t+1)
        Element closed = mul(pow(z, t + 1), trace.remainders[t + 1]);
        for (std::size_t i = 0; i < n; ++i)
            closed = add(closed, mul(sums[i], trace.problem.pairs[i].first));
        if (!(closed == trace.problem.target)) return fail(t, "closed form violated");

        const std::uint64_t order = z_order(tr, residual);
        if (order != trace.residual_orders[t]) return fail(t, "recorded residual order mismatch");
        if (order < t + 1) return fail(t, "residual order below stage bound");
    }
    return {};
}

} // namespace ringlab
