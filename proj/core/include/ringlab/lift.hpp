#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/ring.hpp"

// Iterative expression of a target against generators a_i = f_i + r_i*z in
// the truncated series ring A[z]/(z^N).
//
// Stage t solves   u_t = sum_i g_i(t) * a_i   for the current remainder u_t
// (u_0 is the target) and passes u_{t+1} = sum_i g_i(t) * r_i to the next
// stage. Accumulating H_{t,i} = sum_{s<=t} z^s g_i(s) gives the exact carrier
// identity
//
//   target = sum_i H_{t,i} * f_i + z^{t+1} * u_{t+1}
//
// so the residual target - sum_i H_{t,i} * f_i always has z-order >= t+1.
// Solvability of each stage is a property of the input data; it is detected,
// not assumed, and failure carries the stage index.

namespace ringlab {

struct TruncatedRing {
    RingPtr coeff_ring;       // A, finite
    std::uint64_t truncation; // N >= 2
    RingPtr carrier;          // A[z]/(z^N)
};

TruncatedRing make_truncated_ring(RingPtr coeff_ring, std::uint64_t truncation);

// Views an existing quotient by z^N as a truncated ring; rejects descriptors
// whose modulus is not a pure monic power.
TruncatedRing truncated_from_carrier(RingPtr carrier);

// The class of z in the carrier.
Element z_generator(const TruncatedRing& tr);

// Least t with a nonzero z^t coefficient; N when a == 0. Membership in the
// filtration ideal (z)^t is exactly z_order >= t.
std::uint64_t z_order(const TruncatedRing& tr, const Element& a);

// Coefficient-wise reduction of a carrier element into a smaller truncation.
Element truncate_to(const TruncatedRing& smaller, const Element& a);

struct LiftProblem {
    TruncatedRing ring;
    std::vector<std::pair<Element, Element>> pairs; // (f_i, r_i)
    std::vector<Element> generators;                // a_i = f_i + r_i*z
    Element target;
    std::uint64_t stages = 0;                       // T; trace has stages 0..T
};

// Validates: n >= 1, all elements in the carrier, 0 <= T <= N-1.
LiftProblem make_lift_problem(TruncatedRing tr,
                              std::vector<std::pair<Element, Element>> pairs,
                              Element target, std::uint64_t stages);

// Coefficients (g_1..g_n) with u = sum g_i * gens_i, or nullopt.
//
// The search resolves the z-layers of the unknowns in order: the degree-k
// layer of the equation constrains the layer-k coefficients through the
// constant terms of the generators, so candidates are generated layer by
// layer (each layer's tuples in enumeration order) with backtracking. The
// result is the first solution in this layer-major order; it is complete,
// and choices at layer k depend only on data up to degree k, which keeps
// traces stable across truncations. Budget: per-layer tuple count and total
// visited candidates are both capped by max_membership_tuples.
std::optional<std::vector<Element>> one_step_express(const TruncatedRing& tr, const Element& u,
                                                     const std::vector<Element>& gens,
                                                     const SearchBudget& budget = {});

struct LiftTrace {
    LiftProblem problem;
    std::vector<std::vector<Element>> stage_coefficients; // [t][i], t = 0..T
    std::vector<Element> remainders;                      // [t], t = 0..T+1
    std::vector<std::vector<Element>> partial_sums;       // [t][i]
    std::vector<Element> residuals;                       // [t]
    std::vector<std::uint64_t> residual_orders;           // [t]

    const std::vector<Element>& lifted() const { return partial_sums.back(); }
};

class stage_unsolvable : public error {
  public:
    stage_unsolvable(std::uint64_t stage, std::string what)
        : error(std::move(what)), stage_(stage) {}
    std::uint64_t stage() const { return stage_; }

  private:
    std::uint64_t stage_;
};

// Runs stages 0..T; throws stage_unsolvable(t) when the remainder at stage t
// is not expressible in the generators.
LiftTrace adic_lift(const LiftProblem& problem, const SearchBudget& budget = {});

struct TraceCheck {
    bool ok = true;
    std::uint64_t stage = 0;  // first violated stage when !ok
    std::string what;
    explicit operator bool() const { return ok; }
};

// Independently recomputes every stage identity, partial sum, residual and
// residual order bound; reports the first violation.
TraceCheck verify_trace(const LiftTrace& trace);

} // namespace ringlab
