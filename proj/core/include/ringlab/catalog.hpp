#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

// The fixed ring catalog that selfcheck and the acceptance suite sweep:
//
//   1. Z/n for 2 <= n <= 100
//   2. Z/p[x]/(g) for p in {2,3,5} and every monic g of degree 1..3,
//      enumerated by ascending p, degree, then positional index of the
//      lower coefficients
//   3. binary products: each consecutive pair from sections 1-2, plus a
//      handful of named small products; deduplicated
//
// Everything is filtered by max_order (default 4096), which keeps the run
// at a few hundred rings. The construction is deterministic, so witnesses
// and reports are reproducible run to run.

namespace ringlab {

struct CatalogEntry {
    RingPtr ring;
    std::string spec;
};

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order = 4096);

} // namespace ringlab
