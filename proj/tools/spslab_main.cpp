#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spslab/io.hpp"
#include "spslab/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace spslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation failure or theorem counterexample
constexpr int kExitUsage = 2;

struct Output {
    bool structured = false;
    json doc = json::object();
    std::ostringstream text;

    void kv(const std::string& key, const json& value, const std::string& line) {
        doc[key] = value;
        text << line << "\n";
    }
    void flush() {
        if (structured)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load(const std::string& path) { return parse_instance(read_file(path)); }

/// Analysis commands accept either kind: a space is taken as given or as the
/// Cartan image, an SPS as given or as the membership system.
FiniteClosureSpace as_space(const Instance& inst) {
    if (std::holds_alternative<FiniteClosureSpace>(inst))
        return std::get<FiniteClosureSpace>(inst);
    return functor_F(std::get<StatePropertySystem>(inst));
}

StatePropertySystem as_sps(const Instance& inst) {
    if (std::holds_alternative<StatePropertySystem>(inst))
        return std::get<StatePropertySystem>(inst);
    return functor_G(std::get<FiniteClosureSpace>(inst));
}

std::string set_str(const PointUniverse& u, const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += u.label(i);
        first = false;
    });
    return out + "}";
}

json set_json(const PointUniverse& u, const Bitset& s) {
    json arr = json::array();
    s.for_each([&](int i) { arr.push_back(u.label(i)); });
    return arr;
}

json family_json(const PointUniverse& u, const SetFamily& fam) {
    json arr = json::array();
    for (const auto& f : fam) arr.push_back(set_json(u, f));
    return arr;
}

int cmd_validate(const std::string& path, Output& out) {
    Instance inst = load(path);
    bool is_space = std::holds_alternative<FiniteClosureSpace>(inst);
    out.kv("kind", is_space ? "closure-space" : "sps",
           std::string("valid ") + (is_space ? "closure-space" : "sps"));
    if (is_space) {
        const auto& sp = std::get<FiniteClosureSpace>(inst);
        out.kv("points", sp.point_count(), "points: " + std::to_string(sp.point_count()));
        out.kv("closed_sets", sp.closed().size(),
               "closed sets: " + std::to_string(sp.closed().size()));
    } else {
        const auto& sps = std::get<StatePropertySystem>(inst);
        out.kv("states", sps.state_count(), "states: " + std::to_string(sps.state_count()));
        out.kv("properties", sps.lattice().size(),
               "properties: " + std::to_string(sps.lattice().size()));
    }
    return kExitOk;
}

int cmd_convert(const std::string& path, bool to_closure) {
    Instance inst = load(path);
    if (to_closure)
        std::cout << serialize_instance(functor_F(as_sps(inst)));
    else
        std::cout << serialize_instance(functor_G(as_space(inst)));
    return kExitOk;
}

int cmd_components(const std::string& path, bool quasi, Output& out) {
    FiniteClosureSpace sp = as_space(load(path));
    Partition p = quasi ? quasi_components(sp) : components(sp);
    json arr = json::array();
    for (int i = 0; i < p.block_count(); ++i) {
        arr.push_back(set_json(sp.universe(), p.blocks[i]));
        out.text << "component " << (i + 1) << ": " << set_str(sp.universe(), p.blocks[i])
                 << "\n";
    }
    out.doc["blocks"] = arr;
    out.text << "total: " << p.block_count() << "\n";
    out.doc["count"] = p.block_count();
    return kExitOk;
}

int cmd_clopens(const std::string& path, Output& out) {
    FiniteClosureSpace sp = as_space(load(path));
    SetFamily cl = clopen_sets(sp);
    out.doc["clopens"] = family_json(sp.universe(), cl);
    for (const auto& c : cl) out.text << set_str(sp.universe(), c) << "\n";
    out.doc["count"] = cl.size();
    out.text << "total: " << cl.size() << "\n";
    return kExitOk;
}

int cmd_bool(const std::string& path, bool space_level_topological, Output& out) {
    FiniteClosureSpace sp = as_space(load(path));
    bool verdict = space_level_topological ? is_topological(sp) : is_connected(sp);
    out.kv("result", verdict, verdict ? "true" : "false");
    return kExitOk;
}

int cmd_ssr_table(const std::string& path, Output& out) {
    StatePropertySystem sps = as_sps(load(path));
    const auto& lat = sps.lattice();
    json rows = json::array();
    for (int a = 0; a < lat.size(); ++a) {
        std::string line;
        for (int b = 0; b < lat.size(); ++b) line += ssr(sps, a, b) ? '1' : '0';
        rows.push_back(line);
        out.text << lat.name(a) << ": " << line << "\n";
    }
    out.doc["properties"] = lat.names();
    out.doc["table"] = rows;
    return kExitOk;
}

int cmd_classical_props(const std::string& path, Output& out) {
    StatePropertySystem sps = as_sps(load(path));
    Bitset cls = classical_properties(sps);
    json arr = json::array();
    cls.for_each([&](int a) {
        arr.push_back(sps.lattice().name(a));
        auto witness = is_classical_property(sps, a);
        out.text << sps.lattice().name(a) << "  (complement " << sps.lattice().name(*witness)
                 << ")\n";
    });
    out.doc["classical"] = arr;
    out.doc["classical_sps"] = is_classical_sps(sps);
    out.doc["pure_nonclassical"] = is_pure_nonclassical(sps);
    out.text << "classical system: " << (is_classical_sps(sps) ? "yes" : "no") << "\n";
    out.text << "pure nonclassical: " << (is_pure_nonclassical(sps) ? "yes" : "no") << "\n";
    return kExitOk;
}

json sps_summary_json(const StatePropertySystem& sps) {
    json j;
    j["states"] = sps.states().labels();
    j["properties"] = sps.lattice().names();
    return j;
}

int cmd_decompose(const std::string& path, Output& out) {
    StatePropertySystem sps = as_sps(load(path));
    Decomposition d = decompose(sps);

    json comps = json::array();
    for (size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        json j;
        j["omega"] = set_json(sps.states(), c.omega);
        j["component_property"] = sps.lattice().name(c.s_omega);
        j["lattice_size"] = c.sps.lattice().size();
        j["pure_nonclassical"] = true;
        comps.push_back(j);
        out.text << "component " << (i + 1) << ": states " << set_str(sps.states(), c.omega)
                 << ", s(omega) = " << sps.lattice().name(c.s_omega) << ", "
                 << c.sps.lattice().size() << " properties, pure nonclassical\n";
    }
    out.doc["components"] = comps;

    if (d.totally_classical.ok()) {
        out.doc["totally_classical"] = sps_summary_json(*d.totally_classical.system);
        out.text << "totally classical system: " << d.totally_classical.system->state_count()
                 << " states, " << d.totally_classical.system->lattice().size()
                 << " properties\n";
    } else {
        out.doc["totally_classical_counterexample"] = d.totally_classical.failure_summary();
        out.text << "totally classical system: COUNTEREXAMPLE -- "
                 << d.totally_classical.failure_summary() << "\n";
    }
    out.doc["classical_part"] = sps_summary_json(d.classical_part);
    out.text << "classical part: " << d.classical_part.lattice().size() << " properties\n";

    json evidence = json::array();
    bool all_pass = true;
    for (const auto& e : d.evidence) {
        json j;
        j["name"] = e.name;
        j["pass"] = e.pass;
        if (!e.detail.empty()) j["detail"] = e.detail;
        evidence.push_back(j);
        all_pass = all_pass && e.pass;
        out.text << (e.pass ? "  [ok] " : "  [FAIL] ") << e.name
                 << (e.detail.empty() ? "" : " -- " + e.detail) << "\n";
    }
    out.doc["evidence"] = evidence;
    return all_pass && d.totally_classical.ok() ? kExitOk : kExitFailure;
}

int cmd_classical_part(const std::string& path) {
    std::cout << serialize_instance(classical_part(as_sps(load(path))));
    return kExitOk;
}

int cmd_totally_classical(const std::string& path, Output& out) {
    StatePropertySystem sps = as_sps(load(path));
    TotallyClassicalResult tc = totally_classical_system(sps);
    if (!tc.ok()) {
        out.kv("counterexample", tc.failure_summary(),
               "COUNTEREXAMPLE -- " + tc.failure_summary());
        out.flush();
        return kExitFailure;
    }
    std::cout << serialize_instance(*tc.system);
    return kExitOk;
}

int cmd_segment(const std::string& path, const std::string& property) {
    StatePropertySystem sps = as_sps(load(path));
    std::cout << serialize_instance(segment_system(sps, sps.lattice().index_of(property)));
    return kExitOk;
}

int cmd_enumerate(int n, Output& out) {
    int count = 0;
    json arr = json::array();
    enumerate_closure_spaces(n, [&](const FiniteClosureSpace& sp) {
        ++count;
        if (out.structured)
            arr.push_back(json::parse(serialize_instance(sp)));
        else {
            out.text << "space " << count << ":";
            for (const auto& f : sp.closed()) out.text << " " << set_str(sp.universe(), f);
            out.text << "\n";
        }
    });
    out.doc["spaces"] = std::move(arr);
    out.doc["count"] = count;
    out.text << "total: " << count << "\n";
    return kExitOk;
}

int cmd_random(int n, double density, std::uint64_t seed) {
    std::cout << serialize_instance(random_closure_space(n, density, seed));
    return kExitOk;
}

int cmd_check_theorems(const std::string& path, Output& out) {
    Instance inst = load(path);
    TheoremReport rep = std::holds_alternative<FiniteClosureSpace>(inst)
                            ? theorem_suite(std::get<FiniteClosureSpace>(inst), path)
                            : theorem_suite(std::get<StatePropertySystem>(inst), path);
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json j;
        j["name"] = c.name;
        j["verdict"] = c.verdict == Verdict::Pass             ? "pass"
                       : c.verdict == Verdict::FailWithWitness ? "fail"
                                                               : "not-applicable";
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(j);
        out.text << (c.verdict == Verdict::Pass             ? "[pass] "
                     : c.verdict == Verdict::FailWithWitness ? "[FAIL] "
                                                             : "[n/a]  ")
                 << c.name << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
    out.doc["instance"] = rep.instance_id;
    out.doc["checks"] = checks;
    out.doc["all_passed"] = rep.all_passed();
    out.text << (rep.all_passed() ? "all checks passed" : "counterexample found") << "\n";
    return rep.all_passed() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spslab: finite state property systems and closure spaces"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string path, property;
    int n = 3;
    double density = 0.5;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "validate an instance file");
    validate->add_option("file", path)->required();
    auto* to_closure = app.add_subcommand("to-closure", "apply F to an sps");
    to_closure->add_option("file", path)->required();
    auto* to_sps = app.add_subcommand("to-sps", "apply G to a closure space");
    to_sps->add_option("file", path)->required();
    auto* comps = app.add_subcommand("components", "connection components");
    comps->add_option("file", path)->required();
    auto* quasi = app.add_subcommand("quasi-components", "quasi-components");
    quasi->add_option("file", path)->required();
    auto* clopens = app.add_subcommand("clopens", "clopen sets");
    clopens->add_option("file", path)->required();
    auto* is_topo = app.add_subcommand("is-topological", "union-closure test");
    is_topo->add_option("file", path)->required();
    auto* is_conn = app.add_subcommand("is-connected", "connectedness test");
    is_conn->add_option("file", path)->required();
    auto* ssr_table = app.add_subcommand("ssr-table", "pairwise superselection table");
    ssr_table->add_option("file", path)->required();
    auto* classical = app.add_subcommand("classical-props", "classical properties");
    classical->add_option("file", path)->required();
    auto* decomp = app.add_subcommand("decompose", "full decomposition with evidence");
    decomp->add_option("file", path)->required();
    auto* cpart = app.add_subcommand("classical-part", "classical part as an sps document");
    cpart->add_option("file", path)->required();
    auto* tclass = app.add_subcommand("totally-classical", "totally classical system");
    tclass->add_option("file", path)->required();
    auto* segment = app.add_subcommand("segment", "segment system over a property");
    segment->add_option("file", path)->required();
    segment->add_option("--property", property, "lattice element")->required();
    auto* enumerate = app.add_subcommand("enumerate", "all closure spaces on n points");
    enumerate->add_option("--n", n, "point count (1..4)")->required();
    auto* random = app.add_subcommand("random", "seeded random closure space");
    random->add_option("--n", n, "point count")->required();
    random->add_option("--density", density, "subset inclusion probability")->required();
    random->add_option("--seed", seed, "64-bit seed")->required();
    auto* check = app.add_subcommand("check-theorems", "run the theorem suite");
    check->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.structured = format == "structured";
    int code = kExitOk;
    try {
        if (*validate) code = cmd_validate(path, out);
        else if (*to_closure) return cmd_convert(path, true);
        else if (*to_sps) return cmd_convert(path, false);
        else if (*comps) code = cmd_components(path, false, out);
        else if (*quasi) code = cmd_components(path, true, out);
        else if (*clopens) code = cmd_clopens(path, out);
        else if (*is_topo) code = cmd_bool(path, true, out);
        else if (*is_conn) code = cmd_bool(path, false, out);
        else if (*ssr_table) code = cmd_ssr_table(path, out);
        else if (*classical) code = cmd_classical_props(path, out);
        else if (*decomp) code = cmd_decompose(path, out);
        else if (*cpart) return cmd_classical_part(path);
        else if (*tclass) return cmd_totally_classical(path, out);
        else if (*segment) return cmd_segment(path, property);
        else if (*enumerate) code = cmd_enumerate(n, out);
        else if (*random) return cmd_random(n, density, seed);
        else if (*check) code = cmd_check_theorems(path, out);
    } catch (const ParseError& e) {
        const char* kind = e.kind() == ParseError::Kind::Syntax   ? "syntax error"
                           : e.kind() == ParseError::Kind::Schema ? "schema error"
                                                                  : "axiom error";
        std::cerr << kind << ": " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    out.flush();
    return code;
}
