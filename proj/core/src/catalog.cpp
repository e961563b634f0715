#include "ringlab/catalog.hpp"

#include <set>

#include "ringlab/parse.hpp"

namespace ringlab {

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order) {
    std::vector<CatalogEntry> base;

    for (std::uint64_t n = 2; n <= 100; ++n) base.push_back({Ring::zmod(n), ""});

    for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}}) {
        RingPtr zp = Ring::zmod(p);
        for (std::size_t degree = 1; degree <= 3; ++degree) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < degree; ++i) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<Value> modulus;
                std::uint64_t rest = idx;
                for (std::size_t i = 0; i < degree; ++i) {
                    modulus.push_back(Value(rest % p));
                    rest /= p;
                }
                modulus.push_back(Value(std::uint64_t{1}));
                base.push_back({Ring::quot(zp, std::move(modulus)), ""});
            }
        }
    }

    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    auto push = [&](RingPtr r) {
        if (!r->order_exact() || r->order() > max_order) return;
        std::string spec = to_spec(*r);
        if (!seen.insert(spec).second) return;
        out.push_back({std::move(r), std::move(spec)});
    };

    for (auto& entry : base) push(entry.ring);
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
        push(Ring::prod({base[i].ring, base[i + 1].ring}));

    // small products that come up as worked cases
    const char* named[] = {
        "P(Z/2,Z/3)", "P(Z/2,Z/2)", "P(Z/2,Z/4)", "P(Z/2,Z/9)", "P(Z/4,Q(Z/3,[1,0,1]))",
    };
    SearchBudget permissive{UINT64_MAX, 1};
    for (const char* spec : named) push(parse_ring_spec(spec, permissive));

    return out;
}

} // namespace ringlab
