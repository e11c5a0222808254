#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cidim/reports.hpp"

using namespace cidim;

namespace {

struct Opts {
    std::string ring_file, object_file, deformations_file;
    int cutoff = 10;
    int degree_cap = 20;
    int window = 8;
    std::string format = "table";
    uint64_t seed = 20260823;
    std::string suite = "paper";
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad json in '") + path + "': " + e.what(), 0);
    }
}

AlgebraPtr load_ring(const Opts& o) { return ring_from_json(read_json_file(o.ring_file)); }

Complex load_object(const AlgebraPtr& a, const Opts& o) {
    return object_from_json(a, read_json_file(o.object_file));
}

std::vector<DeformationSpec> load_registry(const AlgebraPtr& a, const Opts& o) {
    if (o.deformations_file.empty()) return {};
    return registry_from_json(*a, read_json_file(o.deformations_file));
}

void emit(const Opts& o, const json& report, const std::string& table) {
    if (o.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << table;
}

std::string degree_cells(const json& by_degree) {
    std::string out;
    for (const auto& [deg, n] : by_degree.items()) {
        if (!out.empty()) out += " ";
        out += deg + ":" + std::to_string(n.get<int>());
    }
    return out.empty() ? "-" : out;
}

std::string levels_table(const json& j) {
    std::vector<std::vector<std::string>> rows{{"level", "total", "by degree"}};
    for (const auto& row : j.at("levels"))
        rows.push_back({std::to_string(row.at("level").get<int>()),
                        std::to_string(row.at("total").get<int>()),
                        degree_cells(row.at("by_degree"))});
    return render_table(rows);
}

std::string verdict_table(const std::string& name, const json& v) {
    std::string out =
        render_table({{"quantity", "verdict", "certified"},
                      {name, v.at("display").get<std::string>(),
                       v.at("certified").get<bool>() ? "yes" : "no"}});
    if (v.contains("certificate"))
        out += "certificate: " + v.at("certificate").get<std::string>() + "\n";
    return out;
}

int cmd_ring_info(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = ring_info_report(a, o.cutoff, o.degree_cap);
    std::vector<std::vector<std::string>> rows{{"field", "value"}};
    rows.push_back({"ring", j["display"].get<std::string>()});
    rows.push_back({"characteristic", std::to_string(j["characteristic"].get<long long>())});
    rows.push_back({"variables", std::to_string(j["variables"].size())});
    rows.push_back({"relations", std::to_string(j["relations"].size())});
    rows.push_back({"artinian", j["artinian"].get<bool>() ? "yes" : "no"});
    if (j.contains("top_degree"))
        rows.push_back({"top degree", std::to_string(j["top_degree"].get<int>())});
    rows.push_back(
        {"complete intersection", j["complete_intersection"].get<bool>() ? "yes" : "no"});
    rows.push_back({"depth", j["depth"]["display"].get<std::string>()});
    emit(o, j, render_table(rows));
    return 0;
}

int cmd_homology(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = homology_report(load_object(a, o), o.degree_cap);
    std::string t = levels_table(j);
    t += "window: degrees through " + std::to_string(j["window"]["hi"].get<int>()) +
         (j["window"]["certified"].get<bool>() ? " (exhaustive)" : " (capped)") + "\n";
    emit(o, j, t);
    return 0;
}

int cmd_resolve(const Opts& o, bool include_complex) {
    AlgebraPtr a = load_ring(o);
    json j = resolution_report(load_object(a, o), o.cutoff, o.degree_cap, include_complex);
    std::string t = levels_table(j);
    t += std::string("complete: ") + (j["complete"].get<bool>() ? "yes" : "no") + "\n";
    t += "pd " + j["pd"]["display"].get<std::string>() + "\n";
    emit(o, j, t);
    return 0;
}

int cmd_poincare(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = poincare_report(load_object(a, o), o.cutoff, o.degree_cap);
    std::ostringstream t;
    t << "base " << j["series"]["base"].get<int>() << ", coefficients";
    for (const auto& c : j["series"]["coefficients"]) t << " " << c.get<int>();
    t << (j["series"]["complete"].get<bool>() ? " (complete)" : " (truncated)") << "\n";
    if (j["complexity"].is_null())
        t << "complexity: series too short to estimate\n";
    else
        t << "complexity " << j["complexity"]["display"].get<std::string>() << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_depth(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = depth_report(load_object(a, o), o.cutoff, o.degree_cap);
    emit(o, j,
         render_table({{"quantity", "value", "certified"},
                       {"depth", j["display"].get<std::string>(),
                        j["certified"].get<bool>() ? "yes" : "no"}}));
    return 0;
}

int cmd_verdict(const Opts& o, const std::string& name) {
    AlgebraPtr a = load_ring(o);
    Complex x = load_object(a, o);
    json j;
    if (name == "pd")
        j = pd_report(x, o.cutoff, o.degree_cap);
    else if (name == "gdim")
        j = gdim_report(x, o.cutoff, o.degree_cap, o.window);
    else
        j = pci_report(x, o.cutoff, o.degree_cap, o.window);
    emit(o, j, verdict_table(name, j));
    return 0;
}

int cmd_cidim_bound(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = ci_bound_report(load_object(a, o), load_registry(a, o), o.cutoff, o.degree_cap);
    std::vector<std::vector<std::string>> rows{{"deformation", "codim", "pd over Q"}};
    for (const auto& r : j["rows"])
        rows.push_back({r["label"].get<std::string>(), std::to_string(r["codim"].get<int>()),
                        r["pd_q"]["display"].get<std::string>()});
    std::string t = render_table(rows);
    std::string witness = j["witness"].get<std::string>();
    t += "ci upper bound " + j["dim"]["display"].get<std::string>() +
         (witness.empty() ? "" : " via " + witness) + "\n";
    emit(o, j, t);
    return 0;
}

int cmd_hierarchy(const Opts& o) {
    AlgebraPtr a = load_ring(o);
    json j = hierarchy_report(load_object(a, o), load_registry(a, o), o.cutoff, o.degree_cap,
                              o.window);
    std::string t = j["display"].get<std::string>() + "\n";
    t += std::string("chain consistent: ") + (j["chain_ok"].get<bool>() ? "yes" : "no") + "\n";
    t += std::string("equalities consistent: ") +
         (j["equality_ok"].get<bool>() ? "yes" : "no") + "\n";
    emit(o, j, t);
    return 0;
}

int cmd_verify(const Opts& o) {
    json j = verify_report(o.seed, o.suite);
    std::string t;
    for (const auto& c : j["cases"]) {
        t += (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") +
             std::to_string(c["id"].get<int>()) + "  " + c["name"].get<std::string>() + "\n";
        if (!c["pass"].get<bool>())
            for (const auto& n : c["notes"]) t += "      - " + n.get<std::string>() + "\n";
    }
    t += std::to_string(j["passed"].get<int>()) + "/" + std::to_string(j["total"].get<int>()) +
         " criteria passed\n";
    emit(o, j, t);
    return j["passed"] == j["total"] ? 0 : 3;
}

int dispatch(const std::string& cmd, const Opts& o) {
    if (cmd == "ring-info") return cmd_ring_info(o);
    if (cmd == "homology") return cmd_homology(o);
    if (cmd == "resolve") return cmd_resolve(o, true);
    if (cmd == "betti") return cmd_resolve(o, false);
    if (cmd == "poincare") return cmd_poincare(o);
    if (cmd == "depth") return cmd_depth(o);
    if (cmd == "pd" || cmd == "gdim" || cmd == "pcidim") return cmd_verdict(o, cmd);
    if (cmd == "cidim-bound") return cmd_cidim_bound(o);
    if (cmd == "hierarchy") return cmd_hierarchy(o);
    if (cmd == "verify") return cmd_verify(o);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological dimensions over graded quotient rings"};
    app.require_subcommand(1);
    Opts o;

    struct SubSpec {
        const char* name;
        const char* desc;
        bool object;
        bool registry;
    };
    const SubSpec specs[] = {
        {"ring-info", "describe the ring and its basic invariants", false, false},
        {"homology", "graded homology dimensions of the object", true, false},
        {"resolve", "minimal free resolution with its Betti data", true, false},
        {"betti", "Betti table of the minimal free resolution", true, false},
        {"poincare", "Poincare series and a complexity estimate", true, false},
        {"depth", "depth via the Koszul complex", true, false},
        {"pd", "projective dimension", true, false},
        {"gdim", "reflexive-class dimension", true, false},
        {"pcidim", "bounded-growth reflexive-class dimension", true, false},
        {"cidim-bound", "upper bound from the deformation family", true, true},
        {"hierarchy", "all four dimensions and their chain", true, true},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.desc);
        sub->add_option("--ring", o.ring_file, "ring file (json)")->required();
        if (s.object)
            sub->add_option("--object", o.object_file, "module or complex file (json)")
                ->required();
        if (s.registry)
            sub->add_option("--deformations", o.deformations_file,
                            "deformation registry file (json)");
        sub->add_option("--cutoff", o.cutoff, "homological cutoff")->check(CLI::Range(1, 64));
        sub->add_option("--degree-cap", o.degree_cap, "internal degree cap")
            ->check(CLI::Range(1, 1000));
        sub->add_option("--window", o.window, "reflexivity window")->check(CLI::Range(1, 64));
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    }
    CLI::App* ver = app.add_subcommand("verify", "run the bundled verification suites");
    ver->add_option("--suite", o.suite, "suite name")
        ->check(CLI::IsMember({"paper", "acceptance", "all"}));
    ver->add_option("--seed", o.seed, "seed for the randomized suites");
    ver->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string cmd;
    for (const auto* sub : app.get_subcommands()) cmd = sub->get_name();
    try {
        return dispatch(cmd, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
