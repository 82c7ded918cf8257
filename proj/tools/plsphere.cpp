// plsphere — command line front end.
//
// Subcommands
//   gen        emit a generated complex (or write the whole catalog)
//   vectors    f/h/g vectors of a complex
//   classify   class-lattice verdicts for one complex or a directory
//   contract   edge contraction report for one edge
//   search-p42 counterexample hunt (vertex-decomposable, not strongly
//              edge-decomposable), with ledger replay
//   suite      run named property suites (default: all)
//
// Exit codes: 0 success; 1 property failure (suite failure, containment
// violation, inconsistent contraction report, or hunt candidate); 2 input
// error; 3 budget exhaustion only (every verdict unknown).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plsphere/suites.hpp"

namespace fs = std::filesystem;
using namespace plsphere;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NamedComplex load_complex(const std::string& path) {
    NamedComplex nc = complex_from_json_text(read_file(path));
    if (nc.name.empty()) nc.name = fs::path(path).stem().string();
    return nc;
}

// One complex per file; a directory means every *.json inside it, in
// filename order.
std::vector<NamedComplex> load_inputs(const std::string& path) {
    if (!fs::exists(path)) throw Error("no such input: " + path);
    if (!fs::is_directory(path)) return {load_complex(path)};
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("directory has no .json inputs: " + path);
    std::vector<NamedComplex> out;
    for (const std::string& f : files) out.push_back(load_complex(f));
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + out_path);
    out << j.dump(2) << "\n";
}

std::vector<json> read_ledger(const std::string& path) {
    std::vector<json> out;
    if (path.empty() || !fs::exists(path)) return out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(json::parse(line));
        } catch (const nlohmann::json::exception&) {
            // foreign lines in a shared ledger are skipped, not fatal
        }
    }
    return out;
}

void append_ledger(const std::string& path, const std::vector<json>& lines) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error("cannot write ledger: " + path);
    for (const json& j : lines) out << j.dump() << "\n";
}

int require_int(const std::vector<std::string>& args, std::size_t i,
                const std::string& what) {
    if (i >= args.size()) throw Error("gen: missing " + what);
    try {
        std::size_t used = 0;
        int v = std::stoi(args[i], &used);
        if (used != args[i].size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error("gen: " + what + " must be an integer, got \"" + args[i] + "\"");
    }
}

std::string require_arg(const std::vector<std::string>& args, std::size_t i,
                        const std::string& what) {
    if (i >= args.size()) throw Error("gen: missing " + what);
    return args[i];
}

int cmd_gen(const std::vector<std::string>& args, const std::string& out_path) {
    const std::string kind = require_arg(args, 0, "generator kind");
    if (kind == "catalog") {
        const std::string dir = require_arg(args, 1, "output directory");
        fs::create_directories(dir);
        std::vector<NamedComplex> cat = catalog_spheres();
        for (const NamedComplex& nc : catalog_balls()) cat.push_back(nc);
        for (const NamedComplex& nc : cat) {
            std::ofstream out(fs::path(dir) / (nc.name + ".json"), std::ios::binary);
            if (!out) throw Error("cannot write file in: " + dir);
            out << complex_to_json(nc.complex, nc.name).dump(2) << "\n";
        }
        std::cout << "wrote " << cat.size() << " complexes to " << dir << "\n";
        return 0;
    }

    NamedComplex nc;
    if (kind == "boundary-simplex") {
        int d = require_int(args, 1, "dimension");
        nc = {"boundary-simplex-" + std::to_string(d), simplex_boundary(d)};
    } else if (kind == "cross") {
        int d = require_int(args, 1, "dimension");
        nc = {"cross-" + std::to_string(d), cross_polytope_boundary(d)};
    } else if (kind == "cyclic") {
        int n = require_int(args, 1, "vertex count");
        int d = require_int(args, 2, "dimension");
        nc = {"cyclic-" + std::to_string(n) + "-" + std::to_string(d),
              cyclic_polytope_boundary(n, d)};
    } else if (kind == "path") {
        int k = require_int(args, 1, "edge count");
        nc = {"path-" + std::to_string(k), path_complex(k)};
    } else if (kind == "fan") {
        int k = require_int(args, 1, "triangle count");
        nc = {"fan-" + std::to_string(k), fan_complex(k)};
    } else if (kind == "suspension" || kind == "sd" || kind == "cone" ||
               kind == "cone-boundary") {
        NamedComplex base = load_complex(require_arg(args, 1, "input file"));
        if (kind == "suspension")
            nc = {"susp-" + base.name, suspension(base.complex)};
        else if (kind == "sd")
            nc = {"sd-" + base.name, barycentric_subdivision(base.complex)};
        else if (kind == "cone")
            nc = {"cone-" + base.name, cone(base.complex)};
        else
            nc = {"cone-boundary-" + base.name,
                  cone_over_boundary_union(base.complex)};
    } else if (kind == "join") {
        NamedComplex a = load_complex(require_arg(args, 1, "first input file"));
        NamedComplex b = load_complex(require_arg(args, 2, "second input file"));
        nc = {"join-" + a.name + "-" + b.name, join(a.complex, b.complex)};
    } else {
        throw Error("gen: unknown generator kind: " + kind);
    }
    emit(complex_to_json(nc.complex, nc.name), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposability classes, guarded edge contractions, and "
                 "Lefschetz witnesses for simplicial spheres"};
    app.require_subcommand(1);

    ClassifyOptions opt;
    bool no_timing = false;
    std::string ledger_path;
    app.add_option("--budget", opt.budget, "search budget in node expansions")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_option("--field", opt.field_p, "prime field modulus for witness search")
        ->capture_default_str();
    app.add_flag("--rational", opt.rational,
                 "re-verify Lefschetz witnesses over the exact rationals");
    app.add_option("--trials", opt.trials, "witness search trials")
        ->capture_default_str();
    app.add_option("--ledger", ledger_path, "append-only JSON-lines ledger path");
    app.add_option("--jobs", opt.jobs, "instance-level worker threads")
        ->capture_default_str();
    app.add_flag("--no-timing", no_timing,
                 "suppress wall-clock fields for reproducible output");

    auto* gen = app.add_subcommand(
        "gen",
        "generate a complex: boundary-simplex D | cross D | cyclic N D | path K | "
        "fan K | suspension FILE | sd FILE | cone FILE | cone-boundary FILE | "
        "join FILE FILE | catalog DIR");
    std::vector<std::string> gen_args;
    std::string gen_out;
    gen->add_option("args", gen_args, "generator kind and arguments")->expected(-1);
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* vectors = app.add_subcommand("vectors", "f/h/g vectors of a complex");
    std::string vectors_input;
    vectors->add_option("input", vectors_input, "complex JSON file")->required();

    auto* classify = app.add_subcommand(
        "classify", "decide the class lattice for a complex or a directory");
    std::string classify_input;
    classify->add_option("input", classify_input, "complex JSON file or directory")
        ->required();

    auto* contract = app.add_subcommand("contract", "edge contraction report");
    std::string contract_input;
    Label contract_u = 0, contract_v = 0;
    contract->add_option("input", contract_input, "complex JSON file")->required();
    contract->add_option("u", contract_u, "first edge endpoint")->required();
    contract->add_option("v", contract_v, "second edge endpoint")->required();

    auto* hunt = app.add_subcommand(
        "search-p42",
        "hunt for a vertex-decomposable, not strongly edge-decomposable sphere");
    int hunt_extra = 12;
    hunt->add_option("--extra", hunt_extra,
                     "extra seeded suspensions/subdivisions beyond the catalog")
        ->capture_default_str();

    auto* suite = app.add_subcommand("suite", "run property suites");
    std::vector<std::string> suite_args;
    suite->add_option("names", suite_args,
                      "suite names (default: all; see `suite list`)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    opt.measure_wall = !no_timing;

    try {
        if (gen->parsed()) return cmd_gen(gen_args, gen_out);

        if (vectors->parsed()) {
            NamedComplex nc = load_complex(vectors_input);
            json j = fhg_to_json(fhg_vectors(nc.complex));
            j["name"] = nc.name;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (classify->parsed()) {
            std::vector<NamedComplex> inputs = load_inputs(classify_input);
            std::vector<ClassifyResult> results = classify_catalog(inputs, opt);
            bool violated = false;
            long records = 0, unknowns = 0;
            std::vector<json> ledger;
            for (const ClassifyResult& res : results) {
                std::cout << classify_result_to_json(res, opt).dump() << "\n";
                for (const std::string& v : res.violations)
                    std::cerr << res.name << ": " << v << "\n";
                violated = violated || !res.violations.empty();
                for (const ClassRecord& rec : res.records) {
                    ++records;
                    if (rec.verdict == "unknown") ++unknowns;
                }
                for (const json& line : ledger_lines(res, opt)) ledger.push_back(line);
            }
            append_ledger(ledger_path, ledger);
            if (violated) return 1;
            if (records > 0 && unknowns == records) return 3;
            return 0;
        }

        if (contract->parsed()) {
            NamedComplex nc = load_complex(contract_input);
            Budget b(opt.budget);
            ContractionReport rep = theorem_2_1_report(nc.complex, contract_u,
                                                       contract_v, b);
            std::cout << contraction_report_to_json(rep).dump(2) << "\n";
            if (!rep.consistent) {
                std::cerr << nc.name << ": decided conditions disagree\n";
                return 1;
            }
            bool all_unknown = rep.deletion_ball.verdict == Verdict::Unknown &&
                               rep.star_union_ball.verdict == Verdict::Unknown &&
                               rep.contracted_sphere.verdict == Verdict::Unknown &&
                               rep.complement_ball.verdict == Verdict::Unknown;
            return all_unknown ? 3 : 0;
        }

        if (hunt->parsed()) {
            std::set<std::string> decided =
                hunt_decided_names(read_ledger(ledger_path), opt);
            HuntResult hr = run_hunt(hunt_instances(opt.seed, hunt_extra), opt, decided);
            std::vector<json> lines;
            for (const HuntRecord& rec : hr.records) {
                for (const json& l : rec.lines) lines.push_back(l);
                if (rec.candidate)
                    std::cout << "CANDIDATE " << rec.name
                              << " VD=yes strongED=no — audit the certificates\n";
            }
            append_ledger(ledger_path, lines);
            std::cout << "instances " << hr.records.size() << ", skipped "
                      << hr.skipped << ", decided " << hr.decided << ", unknowns "
                      << hr.unknowns << ", candidates " << hr.candidates << "\n";
            if (hr.candidates > 0) return 1;
            if (!hr.records.empty() &&
                hr.unknowns == static_cast<long>(hr.records.size()))
                return 3;
            return 0;
        }

        if (suite->parsed()) {
            if (suite_args.size() == 1 && suite_args[0] == "list") {
                for (const std::string& name : suite_names()) std::cout << name << "\n";
                return 0;
            }
            std::vector<std::string> names =
                suite_args.empty() ? suite_names() : suite_args;
            bool all_pass = true;
            for (const std::string& name : names) {
                SuiteReport rep = run_suite(name, opt.budget);
                std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.name;
                std::string stats;
                for (const auto& [k, v] : rep.stats)
                    stats += (stats.empty() ? "" : ", ") + k + " " + std::to_string(v);
                if (!stats.empty()) std::cout << " (" << stats << ")";
                std::cout << "\n";
                for (const std::string& line : rep.lines)
                    std::cout << "  " << line << "\n";
                all_pass = all_pass && rep.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
