// Command line driver: builds the combinatorial objects, dumps the operator
// systems, and runs the verification reports with JSON artifacts.

#include <CLI11.hpp>
#include <json.hpp>

#include "gkz24/checks.hpp"

#include <fstream>
#include <iostream>

using namespace gkz24;
using nlohmann::json;

static constexpr const char* kVersion = "1.0.0";

namespace {

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file " + path);
        os << text;
    }
};

json manifest(const std::string& command, const std::string& target, const json& config,
              const std::string& out_path, bool pass) {
    json m;
    m["tool"] = "gkz24";
    m["version"] = kVersion;
    m["command"] = command;
    m["target"] = target;
    m["config"] = config;
    m["output"] = out_path.empty() ? "-" : out_path;
    m["pass"] = pass;
    return m;
}

void emit_manifest(const json& m, bool artifact_on_stdout) {
    // keep stdout byte-stable when it carries the artifact
    (artifact_on_stdout ? std::cerr : std::cout) << m.dump() << "\n";
}

Fan fan24() { return fan_from_ladder(build_ladder_24()).fan; }

std::vector<Int> parse_divisor(const std::string& name) {
    std::vector<Int> coeffs;
    if (name == "L") {
        coeffs = {1, 0, 0, 0, 0, 0};
    } else if (name == "K") {
        coeffs = {1, 1, 1, 1, 1, 1};
    } else {
        throw CLI::ValidationError("--divisor", "expected L or K");
    }
    return coeffs;
}

int run_build(const std::string& target, const std::string& divisor, const Output& out,
              const std::string& format) {
    std::string text;
    if (target == "fan") {
        auto fl = fan_from_ladder(build_ladder_24());
        if (format == "text") {
            std::ostringstream os;
            for (size_t i = 0; i < fl.paths.size(); ++i) {
                os << fl.paths[i].name() << " : cone {";
                for (size_t k = 0; k < fl.fan.max_cones[i].size(); ++k)
                    os << (k ? "," : "") << "e" << fl.fan.max_cones[i][k] + 1;
                os << "} : w^sigma-hat";
                for (int v : fl.cone_monomials[i]) os << " w" << v + 1;
                os << "\n";
            }
            text = os.str();
        } else {
            text = fan_to_json(fl.fan);
        }
    } else if (target == "resolution") {
        text = fan_to_json(small_resolution_24(fan24()));
    } else if (target == "polytope") {
        auto P = LatticePolytope::from_divisor(
            divisor == "K" ? small_resolution_24(fan24()) : fan24(), parse_divisor(divisor));
        text = polytope_to_json(P, true);
    } else if (target == "roots") {
        auto rs = roots(small_resolution_24(fan24()));
        json j = json::array();
        for (const auto& r : rs) {
            json e;
            e["alpha"] = json::array();
            for (const auto& x : r.alpha) e["alpha"].push_back(x.get_si());
            e["ray"] = r.ray_index;
            json wd = json::array();
            for (const auto& x : r.wD) wd.push_back(x.get_si());
            e["wD"] = wd;
            j.push_back(e);
        }
        text = j.dump(2) + "\n";
    } else {
        throw CLI::ValidationError("target", "unknown build target " + target);
    }
    out.write(text);
    return 0;
}

int run_systems(const std::string& side, const std::string& t_arg, const std::string& split,
                int box_degree, const Output& out) {
    std::string text;
    if (side == "X") {
        if (t_arg == "symbolic") {
            OperatorSystem sym;
            sym.name = "tautological_X_family";
            sym.space = QuarticIndexSet::instance().space;
            for (const auto& x : sl4_basis())
                sym.generators.push_back({"symmetry", x.label, sl4_operator(x)});
            sym.generators.push_back({"euler", "scaling", quartic_euler()});
            int k = 0;
            for (auto& op : q4_operators())
                sym.generators.push_back({"polynomial", "q4_" + std::to_string(k++), std::move(op)});
            k = 0;
            for (auto& op : veronese_binomials())
                sym.generators.push_back({"binomial", "veronese_" + std::to_string(k++), std::move(op)});
            text = system_to_json(sym);
        } else if (t_arg.empty() || t_arg == "1") {
            text = system_to_json(taut_system_X());
        } else {
            Rat t;
            if (mpq_set_str(t.get_mpq_t(), t_arg.c_str(), 10) != 0)
                throw CLI::ValidationError("--t", "expected a rational or 'symbolic'");
            t.canonicalize();
            OperatorSystem at;
            at.name = "tautological_X_at_t";
            at.space = QuarticIndexSet::instance().space;
            for (const auto& x : sl4_basis())
                at.generators.push_back({"symmetry", x.label, sl4_operator(x).specialize_t(t)});
            at.generators.push_back({"euler", "scaling", quartic_euler()});
            int k = 0;
            for (auto& op : q4_operators_at(t))
                at.generators.push_back({"polynomial", "q4_" + std::to_string(k++), std::move(op)});
            k = 0;
            for (auto& op : veronese_binomials())
                at.generators.push_back({"binomial", "veronese_" + std::to_string(k++), std::move(op)});
            text = system_to_json(at);
        }
    } else if (side == "Y") {
        if (!t_arg.empty())
            throw CLI::ValidationError("--t", "the extended GKZ side carries no t parameter");
        auto ctx = make_gkz_context(small_resolution_24(fan24()));
        text = system_to_json(extended_gkz_system(ctx, box_degree));
    } else if (side == "variant") {
        auto br = make_bridge();
        text = system_to_json(variant_system_Y(br).system);
    } else if (side == "ci") {
        auto comma = split.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--split", "expected the form n1,n2");
        int n1 = std::stoi(split.substr(0, comma)), n2 = std::stoi(split.substr(comma + 1));
        if (n1 != 2 || n2 != 2)
            throw CLI::ValidationError("--split", "only the 2,2 split has reference data");
        auto ci = make_ci_context(
            small_resolution_24(fan24()), {2, 2},
            {{Int(1), Int(1), Int(1), Int(0), Int(0), Int(0)},
             {Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)}});
        text = system_to_json(ci_system(ci));
    } else {
        throw CLI::ValidationError("side", "unknown system side " + side);
    }
    out.write(text);
    return 0;
}

int run_verify(const std::string& check, int kmax, int box_degree, const Output& out,
               const std::string& format) {
    std::vector<Report> reports;
    Bridge br = make_bridge();
    if (check == "table" || check == "all") reports.push_back(verify_correspondence_table(br));
    if (check == "degenerate" || check == "all") reports.push_back(degenerate_check(br));
    if (check == "reconstruct" || check == "all") reports.push_back(reconstruct_X_system(br));
    if (check == "periods" || check == "all") reports.push_back(check_periods(br, kmax, box_degree));
    if (check == "all") {
        reports.push_back(check_fan_tables());
        reports.push_back(check_cox_data());
        reports.push_back(check_polytopes());
        reports.push_back(check_roots());
        reports.push_back(check_missing_roots(br));
        reports.push_back(check_ci(br, std::min(kmax, 2)));
        reports.push_back(check_rigidity(br));
        reports.push_back(check_properties(br));
    }
    if (reports.empty()) throw CLI::ValidationError("check", "unknown verification " + check);

    bool pass = true;
    json j = json::array();
    std::ostringstream lines;
    for (const auto& r : reports) {
        pass = pass && r.all_pass();
        j.push_back(json::parse(r.to_json()));
        lines << r.summary();
    }
    if (format == "text") {
        out.write(lines.str());
    } else {
        out.write(j.dump(2) + "\n");
        // human-readable summary stays visible next to the JSON artifact
        (out.path.empty() ? std::cerr : std::cout) << lines.str();
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the G(2,4) toric degeneration and its operator systems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format = "json";
    app.add_option("--out", out_path, "write the main artifact to this file");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* build = app.add_subcommand("build", "serialize fans, polytopes, roots");
    std::string target, divisor = "L";
    build->add_option("target", target, "fan | resolution | polytope | roots")->required();
    build->add_option("--divisor", divisor, "L or K (for polytope)");

    auto* systems = app.add_subcommand("systems", "dump operator systems");
    std::string side, t_arg, split = "2,2";
    int box_degree = 2;
    systems->add_option("side", side, "X | Y | variant | ci")->required();
    systems->add_option("--t", t_arg, "rational value or 'symbolic' (side X only)");
    systems->add_option("--split", split, "CI degrees, e.g. 2,2");
    systems->add_option("--box-degree", box_degree, "degree bound for box operators");

    auto* verify = app.add_subcommand("verify", "run verification reports");
    std::string check;
    int kmax = 3;
    verify->add_option("check", check, "table | degenerate | reconstruct | periods | all")->required();
    verify->add_option("--kmax", kmax, "period truncation level");
    verify->add_option("--box-degree", box_degree, "degree bound for box operators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_path};
    try {
        int rc = 0;
        json config;
        std::string cmd, tgt;
        if (build->parsed()) {
            cmd = "build";
            tgt = target;
            config["divisor"] = divisor;
            config["format"] = format;
            rc = run_build(target, divisor, out, format);
        } else if (systems->parsed()) {
            cmd = "systems";
            tgt = side;
            config["t"] = t_arg.empty() ? "1" : t_arg;
            config["split"] = split;
            config["box_degree"] = box_degree;
            rc = run_systems(side, t_arg, split, box_degree, out);
        } else {
            cmd = "verify";
            tgt = check;
            config["kmax"] = kmax;
            config["box_degree"] = box_degree;
            rc = run_verify(check, kmax, box_degree, out, format);
        }
        emit_manifest(manifest(cmd, tgt, config, out_path, rc == 0), out_path.empty());
        return rc;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
