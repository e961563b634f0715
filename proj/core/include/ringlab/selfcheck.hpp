#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/budget.hpp"
#include "ringlab/catalog.hpp"

// Catalog-wide verification sweeps. Each sweep returns counts plus a short
// description of every failure; a healthy build reports zero failures on
// every sweep. The CLI selfcheck command and the acceptance suite are both
// thin wrappers around these.

namespace ringlab {

struct SweepResult {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> details;
};

// criterion verdict == oracle verdict on every ring; any witness returned by
// either engine is re-verified against an exhaustive membership scan.
struct EquivalenceSweepResult {
    SweepResult agreement;
    SweepResult witnesses;
};
EquivalenceSweepResult equivalence_sweep(const std::vector<CatalogEntry>& catalog,
                                         const SearchBudget& budget = {});

// decompose every ring and re-run the full decomposition verification;
// also checks |idempotents| == 2^(#factors).
SweepResult decomposition_sweep(const std::vector<CatalogEntry>& catalog,
                                const SearchBudget& budget = {}, std::uint64_t seed = 0);

// criterion verdict == "no nonzero nilpotent", tested by repeated squaring.
SweepResult nilpotent_sweep(const std::vector<CatalogEntry>& catalog,
                            const SearchBudget& budget = {});

// ring axioms: exhaustive triples for order <= 64, at least 1000 seeded
// triples above that.
SweepResult axiom_sweep(const std::vector<CatalogEntry>& catalog,
                        const SearchBudget& budget = {}, std::uint64_t seed = 0);

struct SelfcheckOptions {
    std::uint64_t max_order = 4096;
    std::uint64_t seed = 0;
    SearchBudget budget{};
};

struct SelfcheckReport {
    std::uint64_t catalog_size = 0;
    EquivalenceSweepResult equivalence;
    SweepResult decomposition;
    SweepResult nilpotent;
    SweepResult axioms;
    double elapsed_ms = 0;

    bool all_ok() const {
        return equivalence.agreement.failures == 0 && equivalence.witnesses.failures == 0 &&
               decomposition.failures == 0 && nilpotent.failures == 0 && axioms.failures == 0;
    }
};

SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

} // namespace ringlab
