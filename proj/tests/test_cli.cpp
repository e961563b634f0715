#include <doctest.h>

#ifdef RINGLAB_CLI_PATH

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string cmd = std::string(RINGLAB_CLI_PATH) + " " + args +
                      (capture_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Enough of draft-07 to check reports against docs/report.schema.json:
// $ref into definitions, oneOf, type, const, enum, minimum, required,
// properties, additionalProperties:false, items.
bool validate(const json& root, const json& schema, const json& value, std::string& err) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            err = "unsupported $ref " + ref;
            return false;
        }
        return validate(root, root["definitions"][ref.substr(prefix.size())], value, err);
    }
    if (schema.contains("oneOf")) {
        int matches = 0;
        for (const auto& sub : schema["oneOf"]) {
            std::string sub_err;
            if (validate(root, sub, value, sub_err)) ++matches;
        }
        if (matches != 1) {
            err = "oneOf matched " + std::to_string(matches) + " alternatives";
            return false;
        }
        return true;
    }
    if (schema.contains("const") && value != schema["const"]) {
        err = "const mismatch";
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"]) found = found || v == value;
        if (!found) {
            err = "not in enum";
            return false;
        }
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "integer" && value.is_number_integer()) ||
                        (t == "number" && value.is_number()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "boolean" && value.is_boolean()) ||
                        (t == "object" && value.is_object()) ||
                        (t == "array" && value.is_array());
        if (!ok) {
            err = "type is not " + t;
            return false;
        }
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>()) {
        err = "below minimum";
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    err = "missing required key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!validate(root, props[key], sub, err)) {
                    err = key + ": " + err;
                    return false;
                }
            } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                err = "unexpected key " + key;
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& item : value)
            if (!validate(root, schema["items"], item, err)) return false;
    }
    return true;
}

json load_schema() {
    std::ifstream in(RINGLAB_SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

json parse_report(const std::string& args, int expected_exit) {
    RunResult r = run_cli(args + " --format json --no-timing");
    CHECK(r.exit_code == expected_exit);
    json report = json::parse(r.out);
    static const json schema = load_schema();
    std::string err;
    const bool valid = validate(schema, schema, report, err);
    CHECK_MESSAGE(valid, "schema violation in `", args, "`: ", err);
    return report;
}

} // namespace

TEST_CASE("cli describe reports the documented counts") {
    json z6 = parse_report("describe Z/6", 0);
    CHECK(z6["result"]["order"] == 6);
    CHECK(z6["result"]["units"] == 2);
    CHECK(z6["result"]["idempotents"] == 4);
    CHECK(z6["result"]["nilpotents"] == 1);
    CHECK(z6["result"]["connected"] == false);
    CHECK(z6["ring"] == "Z/6");

    json z4 = parse_report("describe Z/4", 0);
    CHECK(z4["result"]["units"] == 2);
    CHECK(z4["result"]["idempotents"] == 2);
    CHECK(z4["result"]["nilpotents"] == 2);
    CHECK(z4["result"]["connected"] == true);

    json f2x = parse_report("describe 'Q(Z/2,[0,0,1])'", 0);
    CHECK(f2x["result"]["order"] == 4);
    CHECK(f2x["result"]["units"] == 2);
    CHECK(f2x["result"]["nilpotents"] == 2);
    CHECK(f2x["result"]["connected"] == true);
}

TEST_CASE("cli output is byte-identical across runs with --no-timing") {
    RunResult a = run_cli("describe Z/6 --format json --no-timing");
    RunResult b = run_cli("describe Z/6 --format json --no-timing");
    CHECK(a.out == b.out);
    RunResult t = run_cli("decompose Z/30 --no-timing");
    RunResult u = run_cli("decompose Z/30 --no-timing");
    CHECK(t.out == u.out);
}

TEST_CASE("cli decompose lists factor orders and field flags") {
    json z30 = parse_report("decompose Z/30", 0);
    REQUIRE(z30["result"]["factor_count"] == 3);
    const auto& f = z30["result"]["factors"];
    CHECK(f[0]["order"] == 2);
    CHECK(f[1]["order"] == 3);
    CHECK(f[2]["order"] == 5);
    for (const auto& entry : f) CHECK(entry["is_field"] == true);

    json z12 = parse_report("decompose Z/12", 0);
    CHECK(z12["result"]["factors"][0]["order"] == 3);
    CHECK(z12["result"]["factors"][0]["is_field"] == true);
    CHECK(z12["result"]["factors"][1]["order"] == 4);
    CHECK(z12["result"]["factors"][1]["is_field"] == false);

    json z7 = parse_report("decompose Z/7", 0);
    CHECK(z7["result"]["factor_count"] == 1);
    CHECK(z7["result"]["factors"][0]["is_field"] == true);
}

TEST_CASE("cli fields-check verdicts and exit codes") {
    json z6 = parse_report("fields-check Z/6", 0);
    CHECK(z6["result"]["is_product_of_fields"] == true);

    json z8 = parse_report("fields-check Z/8 --method both", 1);
    CHECK(z8["result"]["is_product_of_fields"] == false);
    CHECK(z8["result"]["agree"] == true);
    CHECK(z8["result"]["criterion"]["witness"] == "2");
    CHECK(z8["result"]["oracle"]["witness"] == "2");

    json p = parse_report("fields-check 'P(Z/2,Z/4)'", 1);
    CHECK(p["result"]["criterion"]["witness"] == "(0,2)");

    json oracle_only = parse_report("fields-check Z/30 --method oracle", 0);
    CHECK(oracle_only["result"]["method"] == "oracle");
    REQUIRE(oracle_only["result"].contains("factors"));
    CHECK(oracle_only["result"]["factors"].size() == 3);
}

TEST_CASE("cli lift runs the worked example and reports failures") {
    json lifted =
        parse_report("lift --ring 'S(Z/2,8)' --pairs '[(1,1)]' --target 1 --stages 3", 0);
    CHECK(lifted["result"]["verified"] == true);
    CHECK(lifted["result"]["residual_orders"] == json::array({1, 2, 3, 4}));
    CHECK(lifted["result"]["stages"].size() == 4);

    json unsolvable =
        parse_report("lift --ring 'S(Z/2,4)' --pairs '[(z,0)]' --target 1 --stages 1", 3);
    CHECK(unsolvable["result"]["unsolvable_stage"] == 0);
    CHECK(unsolvable["result"]["verified"] == false);

    json z3 = parse_report("lift --ring 'S(Z/3,6)' --pairs '[(2,1)]' --target 1 --stages 2", 0);
    CHECK(z3["result"]["verified"] == true);
}

TEST_CASE("cli selfcheck passes on a subset catalog") {
    json report = parse_report("selfcheck --max-order 32", 0);
    CHECK(report["result"]["all_ok"] == true);
    CHECK(report["result"]["equivalence"]["failures"] == 0);
    CHECK(report["result"]["catalog_size"].get<int>() > 50);
}

TEST_CASE("cli errors exit with 2") {
    CHECK(run_cli("describe Z/1", true).exit_code == 2);
    CHECK(run_cli("describe Z/100000", true).exit_code == 2);            // over default budget
    CHECK(run_cli("describe Z/20 --budget-order 10", true).exit_code == 2);
    CHECK(run_cli("describe 'Q(Z/2,[1,0])'", true).exit_code == 2);      // non-monic
    CHECK(run_cli("lift --ring Z/6 --pairs '[(1,1)]' --target 1 --stages 1", true).exit_code ==
          2); // not a truncation carrier
}

TEST_CASE("cli env var sets the default order budget, flags override it") {
    std::string cmd = std::string("RINGLAB_BUDGET_ORDER=100 ") + RINGLAB_CLI_PATH;
    FILE* deny = popen((cmd + " describe Z/200 2>/dev/null").c_str(), "r");
    REQUIRE(deny != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, deny) > 0) {}
    CHECK(WEXITSTATUS(pclose(deny)) == 2);

    FILE* allow = popen((cmd + " describe Z/200 --budget-order 1000 2>/dev/null").c_str(), "r");
    REQUIRE(allow != nullptr);
    while (fread(buf, 1, sizeof buf, allow) > 0) {}
    CHECK(WEXITSTATUS(pclose(allow)) == 0);
}

#endif // RINGLAB_CLI_PATH
