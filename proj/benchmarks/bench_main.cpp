// Hot-path microbenchmarks: membership strategies against each other,
// enumeration, decomposition and the staged lift.

#include <benchmark/benchmark.h>

#include "ringlab/fields_decision.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/lift.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;

namespace {

void BM_QuotientMul(benchmark::State& state) {
    RingPtr R = parse_ring_spec("Q(Z/5,[2,3,0,1])");
    Element a = element_at(R, 77), b = element_at(R, 101);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_QuotientMul);

void BM_Enumerate(benchmark::State& state) {
    RingPtr R = parse_ring_spec("P(Z/64,Z/64)");
    for (auto _ : state) benchmark::DoNotOptimize(all_elements(R));
}
BENCHMARK(BM_Enumerate);

void BM_MembershipExhaustive(benchmark::State& state) {
    RingPtr R = parse_ring_spec("S(Z/4,3)"); // order 64
    Element f = element_at(R, 38);
    std::vector<Element> gens{element_at(R, 14), element_at(R, 21)};
    for (auto _ : state)
        benchmark::DoNotOptimize(in_ideal(f, gens, {}, MembershipStrategy::exhaustive));
}
BENCHMARK(BM_MembershipExhaustive);

void BM_MembershipAdditive(benchmark::State& state) {
    RingPtr R = parse_ring_spec("S(Z/4,3)");
    Element f = element_at(R, 38);
    std::vector<Element> gens{element_at(R, 14), element_at(R, 21)};
    for (auto _ : state)
        benchmark::DoNotOptimize(in_ideal(f, gens, {}, MembershipStrategy::additive));
}
BENCHMARK(BM_MembershipAdditive);

void BM_MembershipAutomatic(benchmark::State& state) {
    RingPtr R = parse_ring_spec("S(Z/4,3)");
    Element f = element_at(R, 38);
    std::vector<Element> gens{element_at(R, 14), element_at(R, 21)};
    for (auto _ : state) benchmark::DoNotOptimize(in_ideal(f, gens));
}
BENCHMARK(BM_MembershipAutomatic);

void BM_SquareIdealCriterion(benchmark::State& state) {
    RingPtr R = parse_ring_spec("Z/2310");
    for (auto _ : state) benchmark::DoNotOptimize(square_ideal_holds(R));
}
BENCHMARK(BM_SquareIdealCriterion);

void BM_Decompose(benchmark::State& state) {
    RingPtr R = parse_ring_spec("Z/2310"); // 2*3*5*7*11: five factors
    for (auto _ : state) benchmark::DoNotOptimize(decompose(R));
}
BENCHMARK(BM_Decompose);

void BM_AdicLift(benchmark::State& state) {
    TruncatedRing tr = make_truncated_ring(parse_ring_spec("Z/3"), 8);
    LiftProblem p = make_lift_problem(tr, parse_pair_list("[(2,1),(1,z)]", tr.carrier),
                                      parse_element("1", tr.carrier), 7);
    for (auto _ : state) benchmark::DoNotOptimize(adic_lift(p));
}
BENCHMARK(BM_AdicLift);

} // namespace

BENCHMARK_MAIN();
