// ringlab: finite commutative rings from the command line.
//
//   describe      order, unit/idempotent/nilpotent counts, connectedness
//   decompose     connected factors with their unit idempotents
//   fields-check  product-of-fields decision (criterion, oracle, or both)
//   lift          staged expression of a target over generators f_i + r_i*z
//   selfcheck     catalog-wide verification sweeps
//
// Reports print as text or JSON (schema docs/report.schema.json). Output is
// byte-identical across runs apart from timing_ms, which --no-timing drops.
// Exit codes: 0 success (fields-check: is a product of fields), 1 negative
// verdict / failed selfcheck, 2 usage or input error, 3 unsolvable lift stage.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/fields_decision.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/lift.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/selfcheck.hpp"
#include "ringlab/spectrum.hpp"

using json = nlohmann::json;
using namespace ringlab;

namespace {

struct GlobalOptions {
    std::string format = "text";
    bool no_timing = false;
    std::uint64_t seed = 0;
    SearchBudget budget;
    std::string command_echo;
};

json budget_json(const SearchBudget& b) {
    return json{{"max_ring_order", b.max_ring_order},
                {"max_membership_tuples", b.max_membership_tuples}};
}

void emit_report(const GlobalOptions& opt, const std::string& ring_spec, const json& result,
                 const std::vector<std::string>& text_lines, double elapsed_ms) {
    if (opt.format == "json") {
        json report{{"schema_version", 1},
                    {"command", opt.command_echo},
                    {"budget", budget_json(opt.budget)},
                    {"seed", opt.seed},
                    {"result", result}};
        if (!ring_spec.empty()) report["ring"] = ring_spec;
        if (!opt.no_timing) report["timing_ms"] = elapsed_ms;
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << "command: " << opt.command_echo << "\n";
    if (!ring_spec.empty()) std::cout << "ring: " << ring_spec << "\n";
    for (const auto& line : text_lines) std::cout << line << "\n";
    std::cout << "budget: order=" << opt.budget.max_ring_order
              << " tuples=" << opt.budget.max_membership_tuples << "\n";
    if (!opt.no_timing) std::cout << "time_ms: " << elapsed_ms << "\n";
}

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_describe(const GlobalOptions& opt, const std::string& spec) {
    Timer timer;
    RingPtr ring = parse_ring_spec(spec, opt.budget);
    const auto elems = all_elements(ring, opt.budget);

    std::uint64_t units = 0, idems = 0, nilpotents = 0;
    for (const auto& a : elems) {
        if (is_unit(a, opt.budget)) ++units;
        if (mul(a, a) == a) ++idems;
        if (is_nilpotent(a)) ++nilpotents;
    }
    const bool connected = idems == 2;

    json result{{"order", ring->order()}, {"units", units},        {"idempotents", idems},
                {"nilpotents", nilpotents}, {"connected", connected}};
    std::vector<std::string> lines{
        "order: " + std::to_string(ring->order()),
        "units: " + std::to_string(units),
        "idempotents: " + std::to_string(idems),
        "nilpotents: " + std::to_string(nilpotents),
        std::string("connected: ") + (connected ? "true" : "false"),
    };
    emit_report(opt, to_spec(*ring), result, lines, timer.ms());
    return 0;
}

int cmd_decompose(const GlobalOptions& opt, const std::string& spec) {
    Timer timer;
    RingPtr ring = parse_ring_spec(spec, opt.budget);
    FactorDecomposition dec = decompose(ring, opt.budget);

    json factors = json::array();
    std::vector<std::string> lines;
    lines.push_back("factors: " + std::to_string(dec.factors.size()));
    for (const auto& f : dec.factors) {
        const bool field = is_field(f);
        factors.push_back(json{{"order", f.order()},
                               {"unit", to_literal(f.unit)},
                               {"is_field", field}});
        lines.push_back("  order " + std::to_string(f.order()) + ", unit " +
                        to_literal(f.unit) + ", field " + (field ? "true" : "false"));
    }
    const std::uint64_t idems = idempotents(ring, opt.budget).size();
    json result{{"factor_count", dec.factors.size()},
                {"factors", factors},
                {"idempotent_count", idems}};
    lines.push_back("idempotents: " + std::to_string(idems));
    emit_report(opt, to_spec(*ring), result, lines, timer.ms());
    return 0;
}

json verdict_json(const FieldsVerdict& v) {
    json out{{"is_product_of_fields", v.is_product_of_fields}};
    switch (v.method) {
    case VerdictMethod::criterion: out["method"] = "criterion"; break;
    case VerdictMethod::oracle: out["method"] = "oracle"; break;
    case VerdictMethod::proof_witness: out["method"] = "proof_witness"; break;
    }
    if (v.witness) {
        out["witness"] = to_literal(*v.witness);
        out["witness_square"] = to_literal(mul(*v.witness, *v.witness));
    }
    if (v.field_factors) {
        json fs = json::array();
        for (const auto& f : *v.field_factors)
            fs.push_back(json{{"order", f.order()}, {"unit", to_literal(f.unit)}});
        out["factors"] = fs;
    }
    return out;
}

int cmd_fields_check(const GlobalOptions& opt, const std::string& spec,
                     const std::string& method) {
    Timer timer;
    RingPtr ring = parse_ring_spec(spec, opt.budget);

    json result;
    std::vector<std::string> lines;
    bool verdict = false;
    if (method == "criterion" || method == "oracle") {
        FieldsVerdict v = method == "criterion" ? square_ideal_holds(ring, opt.budget)
                                                : product_of_fields_oracle(ring, opt.budget);
        verdict = v.is_product_of_fields;
        result = verdict_json(v);
        lines.push_back(std::string("is_product_of_fields: ") + (verdict ? "true" : "false"));
        lines.push_back("method: " + method);
        if (v.witness) lines.push_back("witness: " + to_literal(*v.witness));
    } else {
        EquivalenceReport rep = theorem_equivalence_check(ring, opt.budget);
        if (!rep.agree) {
            // cannot happen unless the build is broken; surface loudly
            std::cerr << "engine disagreement: " << rep.discrepancy << "\n";
            return 2;
        }
        verdict = rep.criterion.is_product_of_fields;
        result = json{{"is_product_of_fields", verdict},
                      {"method", "both"},
                      {"agree", rep.agree},
                      {"criterion", verdict_json(rep.criterion)},
                      {"oracle", verdict_json(rep.oracle)}};
        lines.push_back(std::string("is_product_of_fields: ") + (verdict ? "true" : "false"));
        lines.push_back("method: both (engines agree)");
        if (rep.criterion.witness)
            lines.push_back("criterion witness: " + to_literal(*rep.criterion.witness));
        if (rep.oracle.witness)
            lines.push_back("oracle witness: " + to_literal(*rep.oracle.witness));
    }
    emit_report(opt, to_spec(*ring), result, lines, timer.ms());
    return verdict ? 0 : 1;
}

int cmd_lift(const GlobalOptions& opt, const std::string& ring_spec, const std::string& pairs_text,
             const std::string& target_text, std::uint64_t stages) {
    Timer timer;
    RingPtr carrier = parse_ring_spec(ring_spec, opt.budget);
    TruncatedRing tr = truncated_from_carrier(carrier);
    auto pairs = parse_pair_list(pairs_text, tr.carrier);
    Element target = parse_element(target_text, tr.carrier);
    LiftProblem problem = make_lift_problem(tr, std::move(pairs), std::move(target), stages);

    json result{{"truncation", tr.truncation}, {"stage_count", stages + 1}};
    std::vector<std::string> lines;
    try {
        LiftTrace trace = adic_lift(problem, opt.budget);
        TraceCheck check = verify_trace(trace);

        json stage_rows = json::array();
        for (std::size_t t = 0; t < trace.stage_coefficients.size(); ++t) {
            json coeffs = json::array();
            for (const auto& g : trace.stage_coefficients[t]) coeffs.push_back(to_literal(g));
            stage_rows.push_back(json{{"stage", t},
                                      {"coefficients", coeffs},
                                      {"remainder", to_literal(trace.remainders[t + 1])},
                                      {"residual_order", trace.residual_orders[t]}});
            std::string row = "stage " + std::to_string(t) + ": residual_order " +
                              std::to_string(trace.residual_orders[t]) + ", g = [";
            for (std::size_t i = 0; i < trace.stage_coefficients[t].size(); ++i)
                row += (i ? ", " : "") + to_literal(trace.stage_coefficients[t][i]);
            row += "]";
            lines.push_back(row);
        }
        json lifted = json::array();
        std::string lifted_line = "lifted: [";
        for (std::size_t i = 0; i < trace.lifted().size(); ++i) {
            lifted.push_back(to_literal(trace.lifted()[i]));
            lifted_line += (i ? ", " : "") + to_literal(trace.lifted()[i]);
        }
        lifted_line += "]";
        result["stages"] = stage_rows;
        result["lifted"] = lifted;
        result["residual_orders"] = trace.residual_orders;
        result["verified"] = check.ok;
        lines.push_back(lifted_line);
        lines.push_back(std::string("verified: ") + (check.ok ? "true" : "false"));
        emit_report(opt, to_spec(*tr.carrier), result, lines, timer.ms());
        return check.ok ? 0 : 2;
    } catch (const stage_unsolvable& e) {
        result["unsolvable_stage"] = e.stage();
        result["verified"] = false;
        lines.push_back("unsolvable_stage: " + std::to_string(e.stage()));
        emit_report(opt, to_spec(*tr.carrier), result, lines, timer.ms());
        return 3;
    }
}

int cmd_selfcheck(const GlobalOptions& opt, std::uint64_t max_order) {
    Timer timer;
    SelfcheckOptions options;
    options.max_order = max_order;
    options.seed = opt.seed;
    options.budget = opt.budget;
    SelfcheckReport rep = run_selfcheck(options);

    auto sweep_json = [](const SweepResult& s) {
        return json{{"checked", s.checked}, {"failures", s.failures}, {"details", s.details}};
    };
    json result{{"catalog_size", rep.catalog_size},
                {"equivalence", sweep_json(rep.equivalence.agreement)},
                {"witnesses", sweep_json(rep.equivalence.witnesses)},
                {"decomposition", sweep_json(rep.decomposition)},
                {"nilpotent", sweep_json(rep.nilpotent)},
                {"axioms", sweep_json(rep.axioms)},
                {"all_ok", rep.all_ok()}};

    auto sweep_line = [](const char* name, const SweepResult& s) {
        return std::string(name) + ": " + std::to_string(s.checked) + " checked, " +
               std::to_string(s.failures) + " failures";
    };
    std::vector<std::string> lines{
        "catalog: " + std::to_string(rep.catalog_size) + " rings",
        sweep_line("equivalence", rep.equivalence.agreement),
        sweep_line("witnesses", rep.equivalence.witnesses),
        sweep_line("decomposition", rep.decomposition),
        sweep_line("nilpotent", rep.nilpotent),
        sweep_line("axioms", rep.axioms),
        std::string("all_ok: ") + (rep.all_ok() ? "true" : "false"),
    };
    for (const auto& sweep :
         {rep.equivalence.agreement, rep.equivalence.witnesses, rep.decomposition,
          rep.nilpotent, rep.axioms})
        for (const auto& d : sweep.details) lines.push_back("  failure: " + d);

    emit_report(opt, "", result, lines, timer.ms());
    return rep.all_ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative ring toolbox"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opt;
    if (const char* env = std::getenv("RINGLAB_BUDGET_ORDER"))
        opt.budget.max_ring_order = std::strtoull(env, nullptr, 10);

    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget-order", opt.budget.max_ring_order,
                   "largest ring order any enumeration will touch");
    app.add_option("--budget-tuples", opt.budget.max_membership_tuples,
                   "largest coefficient-tuple space a membership search will scan");
    app.add_flag("--no-timing", opt.no_timing, "omit timing from reports");
    app.add_option("--seed", opt.seed, "seed for sampled checks");

    std::string ring_spec, method = "both", pairs_text, target_text;
    std::uint64_t stages = 0, max_order = 4096;

    CLI::App* describe = app.add_subcommand("describe", "basic facts about a ring");
    describe->add_option("ring", ring_spec, "ring spec")->required();

    CLI::App* decomp = app.add_subcommand("decompose", "connected factors via idempotents");
    decomp->add_option("ring", ring_spec, "ring spec")->required();

    CLI::App* fields = app.add_subcommand("fields-check", "product-of-fields decision");
    fields->add_option("ring", ring_spec, "ring spec")->required();
    fields->add_option("--method", method, "criterion|oracle|both")
        ->check(CLI::IsMember({"criterion", "oracle", "both"}));

    CLI::App* lift = app.add_subcommand("lift", "staged lifting over A[z]/(z^N)");
    lift->add_option("--ring", ring_spec, "carrier, e.g. S(Z/2,8)")->required();
    lift->add_option("--pairs", pairs_text, "[(f1,r1),...]")->required();
    lift->add_option("--target", target_text, "element to express")->required();
    lift->add_option("--stages", stages, "last stage index T")->required();

    CLI::App* self = app.add_subcommand("selfcheck", "catalog verification sweeps");
    self->add_option("--max-order", max_order, "catalog order cap");

    CLI11_PARSE(app, argc, argv);

    std::string echo;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) echo += ' ';
        echo += argv[i];
    }
    opt.command_echo = echo;

    try {
        if (describe->parsed()) return cmd_describe(opt, ring_spec);
        if (decomp->parsed()) return cmd_decompose(opt, ring_spec);
        if (fields->parsed()) return cmd_fields_check(opt, ring_spec, method);
        if (lift->parsed()) return cmd_lift(opt, ring_spec, pairs_text, target_text, stages);
        if (self->parsed()) return cmd_selfcheck(opt, max_order);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
