// absorb: command-line front end for the finite module checkers.
//
//   absorb check --module "cyc(Zn(12),12)" --sub "gen[6]" --prop gsdf
//   absorb enumerate --module "Zn(12)" --prop gsdf --format csv
//   absorb verify --suite eq-equivalence
//   absorb classify --max 300 --format csv
//
// Exit status: 0 holds / passes, 1 witnessed failure, 2 usage or elaboration error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "absorb/dsl.hpp"
#include "absorb/enumeration.hpp"
#include "absorb/error.hpp"
#include "absorb/harness.hpp"
#include "absorb/predicates.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace absorb;

constexpr const char* kToolVersion = "0.1.0";

struct Output {
    std::string format = "json";
    std::string out_file;
};

struct Result {
    json doc;
    std::string text;                  // text rendering
    std::optional<std::string> csv;    // table rendering, when there is a table
    int exit_code = 0;
};

json element_json(Index index, std::string render) {
    return json{{"index", index}, {"render", std::move(render)}};
}

json witness_json(const Witness& w, const FiniteRing& r, const FiniteModule* m) {
    json out;
    out["u"] = element_json(w.u, r.render(w.u));
    if (w.v) out["v"] = element_json(*w.v, r.render(*w.v));
    if (w.x && m) out["x"] = element_json(*w.x, m->render(*w.x));
    out["k_bound"] = w.k_bound;
    return out;
}

std::string witness_text(const Witness& w, const FiniteRing& r, const FiniteModule* m) {
    std::string out = "u=" + r.render(w.u);
    if (w.v) out += " v=" + r.render(*w.v);
    if (w.x && m) out += " x=" + m->render(*w.x);
    return out;
}

FiniteModule module_from(const std::string& module_spec, const std::string& ring_spec,
                         std::string& spec_out) {
    if (!module_spec.empty() && !ring_spec.empty()) {
        throw Error(ErrorKind::usage, "give either --module or --ring, not both");
    }
    if (!module_spec.empty()) {
        spec_out = module_spec;
        return parse_module(module_spec);
    }
    if (!ring_spec.empty()) {
        spec_out = ring_spec;
        return self_module(parse_ring(ring_spec));
    }
    throw Error(ErrorKind::usage, "--module or --ring is required");
}

PropertyKind property_from(const std::string& name) {
    auto p = parse_property(name);
    if (!p) throw Error(ErrorKind::usage, "unknown property '" + name + "'");
    return *p;
}

double since_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Result cmd_check(const std::string& module_spec, const std::string& ring_spec,
                 const std::string& sub_spec, const std::string& prop, bool nonzero) {
    const auto start = std::chrono::steady_clock::now();
    std::string spec;
    const FiniteModule m = module_from(module_spec, ring_spec, spec);
    const PropertyKind kind = property_from(prop);
    const Submodule n = parse_submodule(sub_spec, m);
    const PropertyReport r = check_property(kind, n, nonzero);

    Result out;
    out.doc["command"] = "check";
    out.doc["spec"] = spec;
    out.doc["module"] = m.key();
    out.doc["submodule"] = n.render();
    out.doc["property"] = to_string(kind);
    out.doc["variant_nonzero"] = nonzero;
    out.doc["holds"] = r.holds;
    if (r.witness) out.doc["witness"] = witness_json(*r.witness, m.ring(), &m);
    out.doc["checked_count"] = r.checked_count;
    out.doc["elapsed_ms"] = since_ms(start);
    out.doc["tool_version"] = kToolVersion;

    out.text = m.key() + " " + n.render() + " " + to_string(kind) + ": " + yes_no(r.holds) + "\n";
    if (r.witness) out.text += "witness: " + witness_text(*r.witness, m.ring(), &m) + "\n";
    out.exit_code = r.holds ? 0 : 1;
    return out;
}

Result cmd_enumerate(const std::string& module_spec, const std::string& ring_spec,
                     const std::vector<std::string>& props, bool nonzero) {
    const auto start = std::chrono::steady_clock::now();
    std::string spec;
    const FiniteModule m = module_from(module_spec, ring_spec, spec);
    std::vector<PropertyKind> kinds;
    for (const auto& p : props) kinds.push_back(property_from(p));
    const SubmoduleLattice lattice = all_submodules(m);

    json table = json::array();
    std::ostringstream csv, text;
    csv << "submodule,size";
    for (auto k : kinds) csv << "," << to_string(k);
    csv << "\n";
    for (const auto& n : lattice.proper_members()) {
        json row{{"submodule", n.render()}, {"size", n.size()}};
        csv << '"' << n.render() << '"' << "," << n.size();
        text << n.render() << " (" << n.size() << ")";
        for (auto k : kinds) {
            const bool v = check_property(k, n, nonzero).holds;
            row[to_string(k)] = v;
            csv << "," << (v ? "T" : "F");
            text << " " << to_string(k) << "=" << (v ? "T" : "F");
        }
        table.push_back(std::move(row));
        csv << "\n";
        text << "\n";
    }

    Result out;
    out.doc["command"] = "enumerate";
    out.doc["spec"] = spec;
    out.doc["module"] = m.key();
    json names = json::array();
    for (auto k : kinds) names.push_back(to_string(k));
    out.doc["properties"] = names;
    out.doc["holds"] = true;
    out.doc["table"] = std::move(table);
    out.doc["elapsed_ms"] = since_ms(start);
    out.doc["tool_version"] = kToolVersion;
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

Result cmd_verify(const std::string& suite, const SuiteParams& params) {
    const SuiteReport r = run_suite(suite, params);
    Result out;
    json parameters = json::object();
    for (const auto& [k, v] : r.parameters) parameters[k] = v;
    json violations = json::array();
    for (const auto& v : r.violations) {
        json row{{"description", v.description}, {"property", to_string(v.report.property)},
                 {"holds", v.report.holds}};
        if (v.report.witness) {
            const Witness& w = *v.report.witness;
            row["witness"] = json{{"u", w.u}, {"k_bound", w.k_bound}};
            if (w.v) row["witness"]["v"] = *w.v;
            if (w.x) row["witness"]["x"] = *w.x;
        }
        violations.push_back(std::move(row));
    }
    json confirmations = json::array();
    for (const auto& c : r.confirmations) {
        confirmations.push_back({{"description", c.description}, {"confirmed", c.confirmed}});
    }
    out.doc["command"] = "verify";
    out.doc["spec"] = parameters;
    out.doc["suite"] = r.suite_id;
    out.doc["anchor"] = r.anchor;
    out.doc["holds"] = r.passed();
    out.doc["instances_checked"] = r.instances_checked;
    out.doc["violations"] = std::move(violations);
    out.doc["confirmations"] = std::move(confirmations);
    out.doc["notes"] = r.notes;
    out.doc["elapsed_ms"] = r.elapsed.count();
    out.doc["tool_version"] = kToolVersion;

    std::ostringstream text;
    text << r.suite_id << ": " << (r.passed() ? "PASS" : "FAIL") << " instances=" << r.instances_checked
         << " violations=" << r.violations.size() << "\n";
    for (const auto& v : r.violations) text << "  violation: " << v.description << "\n";
    for (const auto& c : r.confirmations) {
        text << "  " << (c.confirmed ? "confirmed: " : "NOT confirmed: ") << c.description << "\n";
    }
    for (const auto& n : r.notes) text << "  note: " << n << "\n";
    out.text = text.str();
    out.exit_code = r.passed() ? 0 : 1;
    return out;
}

Result cmd_classify(int max_n, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    const ZnClassification c = classify_zn(max_n, jobs);
    json table = json::array();
    std::ostringstream csv, text;
    csv << "n,factorization,gsdf,predicted,match\n";
    for (const auto& row : c.rows) {
        json j{{"n", row.n}, {"factorization", row.factorization}, {"gsdf", row.gsdf},
               {"predicted", row.predicted}, {"match", row.match()}};
        if (row.witness) {
            const Witness& w = *row.witness;
            j["witness"] = json{{"u", w.u}, {"v", w.v.value_or(0)}, {"x", w.x.value_or(0)}};
        }
        table.push_back(std::move(j));
        csv << row.n << "," << row.factorization << "," << yes_no(row.gsdf) << "," << yes_no(row.predicted)
            << "," << yes_no(row.match()) << "\n";
    }
    Result out;
    out.doc["command"] = "classify";
    out.doc["spec"] = json{{"max_n", max_n}};
    out.doc["holds"] = c.mismatches() == 0;
    out.doc["rows"] = c.rows.size();
    out.doc["mismatches"] = c.mismatches();
    out.doc["table"] = std::move(table);
    out.doc["elapsed_ms"] = since_ms(start);
    out.doc["tool_version"] = kToolVersion;
    text << "rows=" << c.rows.size() << " mismatches=" << c.mismatches() << "\n";
    for (const auto& row : c.rows) {
        if (!row.match()) text << "  mismatch at n=" << row.n << " (" << row.factorization << ")\n";
    }
    out.text = text.str();
    out.csv = csv.str();
    out.exit_code = c.mismatches() == 0 ? 0 : 1;
    return out;
}

void emit(const Result& r, const Output& o) {
    std::string body;
    if (o.format == "json") {
        body = r.doc.dump(2) + "\n";
    } else if (o.format == "csv") {
        if (!r.csv) throw Error(ErrorKind::usage, "this command has no table for --format csv");
        body = *r.csv;
    } else {
        body = r.text;
    }
    if (o.out_file.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw Error(ErrorKind::usage, "cannot write " + o.out_file);
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks absorbing-type submodule properties of finite modules"};
    app.require_subcommand(1);
    Output output;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", output.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", output.out_file, "write the report to FILE");
    };

    std::string module_spec, ring_spec, sub_spec, suite;
    std::vector<std::string> props;
    std::string prop;
    bool nonzero = false;
    int max_n = 0, max_ab = 0;
    unsigned jobs = 1;

    auto* check = app.add_subcommand("check", "decide one property of one submodule");
    check->add_option("--module", module_spec, "module spec");
    check->add_option("--ring", ring_spec, "ring spec (the ring acting on itself)");
    check->add_option("--sub", sub_spec, "submodule: gen[...], zero or full")->required();
    check->add_option("--prop", prop, "gsdf|sdf|primary|cprimary|prime|sdfideal|sdfprimary")->required();
    check->add_flag("--variant-nonzero", nonzero, "sdf-primary: skip u = 0 and v = 0");
    add_output(check);

    auto* enumerate = app.add_subcommand("enumerate", "list proper submodules with property columns");
    enumerate->add_option("--module", module_spec, "module spec");
    enumerate->add_option("--ring", ring_spec, "ring spec (the ring acting on itself)");
    enumerate->add_option("--prop", props, "property column (repeatable)");
    enumerate->add_flag("--variant-nonzero", nonzero, "sdf-primary: skip u = 0 and v = 0");
    add_output(enumerate);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite id")->required();
    verify->add_option("--max", max_n, "override the suite's Z_n bound");
    verify->add_option("--max-ab", max_ab, "override the suite's Z_a x Z_b bound");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output(verify);

    auto* classify = app.add_subcommand("classify", "classify gsdf zero submodules of Z_n");
    classify->add_option("--max", max_n, "largest n")->required();
    classify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output(classify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Result r;
        if (check->parsed()) {
            r = cmd_check(module_spec, ring_spec, sub_spec, prop, nonzero);
        } else if (enumerate->parsed()) {
            r = cmd_enumerate(module_spec, ring_spec, props, nonzero);
        } else if (verify->parsed()) {
            SuiteParams params;
            if (max_n > 0) params.max_n = max_n;
            if (max_ab > 0) params.max_ab = max_ab;
            params.jobs = jobs;
            r = cmd_verify(suite, params);
        } else {
            r = cmd_classify(max_n, jobs);
        }
        emit(r, output);
        return r.exit_code;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
