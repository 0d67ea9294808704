// zeckit: proof scripts, the seven-step pipeline and array tables from the shell.
//
// Exit codes: 0 everything held, 1 an eval was FALSE or a check failed,
// 2 bad usage or a parse error.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "zeckit/acceptance.hpp"
#include "zeckit/automaton_io.hpp"
#include "zeckit/base_relations.hpp"
#include "zeckit/inference.hpp"
#include "zeckit/interspersion.hpp"
#include "zeckit/pipeline.hpp"
#include "zeckit/script.hpp"

#ifndef ZECKIT_SOURCE_DIR
#define ZECKIT_SOURCE_DIR "."
#endif

namespace fs = std::filesystem;
using namespace zeckit;

namespace {

constexpr int kOk = 0, kFalse = 1, kUsage = 2;

struct Globals {
    fs::path store = "store";
    std::uint64_t limit = 0;
    bool quiet = false;
};

CertificationBounds bounds(const Globals& g) {
    CertificationBounds b;
    if (g.limit == 0) return b;
    auto cap = [&](std::uint64_t& v) { v = std::min(v, g.limit); };
    cap(b.less_than);
    cap(b.successor_samples);
    cap(b.adder_samples);
    cap(b.shift);
    cap(b.phi2n);
    b.phin = g.limit;
    return b;
}

// Certified base relations plus whatever the store already holds.
Registry open_registry(const Globals& g) {
    auto base = certify_base_relations(bounds(g), [&](const CertifiedRelation& r) {
        if (!g.quiet) std::cerr << "certified " << r.name << '\n';
    });
    Registry reg = base.registry;
    load_store(g.store, reg);
    return reg;
}

void save_new(const Registry& reg, const fs::path& store) {
    fs::create_directories(store);
    const auto reserved = reserved_names();
    for (const auto& name : reg.names()) {
        if (std::find(reserved.begin(), reserved.end(), name) != reserved.end()) continue;
        save_automaton(store / (name + ".aut"), reg.at(name));
    }
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw std::invalid_argument("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cmd_run(const Globals& g, const fs::path& script) {
    std::vector<Command> commands;
    try {
        commands = parse_script(read_file(script));
    } catch (const ParseError& e) {
        std::cerr << script.string() << ':' << e.what() << '\n';
        return kUsage;
    }
    Registry reg = open_registry(g);
    bool all_true = true;
    try {
        run_commands(commands, reg, g.store, [&](const CommandResult& r) {
            if (r.value) {
                std::cout << to_string(r) << '\n' << std::flush;
                all_true = all_true && *r.value;
            } else if (!g.quiet) {
                std::cerr << to_string(r) << '\n';
            }
        });
    } catch (const ParseError& e) {
        std::cerr << script.string() << ':' << e.what() << '\n';
        return kUsage;
    }
    return all_true ? kOk : kFalse;
}

int cmd_prove(const Globals& g, const std::string& which, std::size_t samples) {
    std::vector<ArraySpec> specs;
    if (which == "all") specs = builtin_arrays();
    else specs.push_back(builtin_array(which));
    Registry reg = open_registry(g);
    PipelineOptions opt;
    opt.samples = samples;
    bool ok = true;
    for (const auto& spec : specs) {
        const auto report = seven_step_verify(spec, reg, opt);
        std::cout << report.to_text() << std::flush;
        ok = ok && report.fully_verified() &&
             std::all_of(report.theorems.begin(), report.theorems.end(), [](const auto& t) { return t.second; });
    }
    save_new(reg, g.store);
    return ok ? kOk : kFalse;
}

int cmd_array(const std::string& name, std::size_t rows, std::size_t cols, bool tsv) {
    const Table t = generate(builtin_array(name), rows, cols);
    std::cout << (tsv ? to_tsv(t) : to_pretty(t));
    return kOk;
}

int cmd_guess(const Globals& g, const fs::path& samples, const std::string& save_as) {
    const SampleSet s = read_samples(samples);
    Dfa a = guess_dfa(s);
    std::cout << to_text(a);
    if (!save_as.empty()) {
        fs::create_directories(g.store);
        save_automaton(g.store / (save_as + ".aut"), a);
    }
    return kOk;
}

int cmd_export_dot(const Globals& g, const std::string& name) {
    Registry reg = open_registry(g);
    if (!reg.contains(name)) {
        std::cerr << "no automaton named '" << name << "'\n";
        return kUsage;
    }
    std::cout << to_dot(reg.at(name), name);
    return kOk;
}

int cmd_selftest(const fs::path& source_dir, const fs::path& self) {
    AcceptanceOptions opt;
    opt.source_dir = source_dir;
    opt.cli = self;
    opt.work_dir = fs::temp_directory_path() / ("zeckit-selftest-" + std::to_string(::getpid()));
    bool ok = true;
    run_acceptance(opt, [&](const CriterionResult& r) {
        std::cout << format_result(r) << '\n' << std::flush;
        ok = ok && r.passed;
    });
    fs::remove_all(opt.work_dir);
    return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci-automata proof scripts and interspersion arrays"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--store", g.store, "Directory of saved automata")->capture_default_str();
    app.add_option("--limit", g.limit, "Lower the base-relation certification bounds to N (phin is checked to N)");
    app.add_flag("-q,--quiet", g.quiet, "Only print results");

    fs::path script;
    auto* run = app.add_subcommand("run", "Run a proof script");
    run->add_option("script", script)->required();

    std::string prove_name;
    std::size_t samples = 0;
    auto* prove = app.add_subcommand("prove", "Seven-step verification of a built-in array");
    prove->add_option("array", prove_name, "wythoff, stolarsky, dual, efc, esc, k100 or all")->required();
    prove->add_option("--samples", samples, "Column-1 terms used for the guess");

    std::string array_name;
    std::size_t rows = 10, cols = 10;
    bool tsv = false;
    auto* array = app.add_subcommand("array", "Print the upper-left corner of an array");
    array->add_option("name", array_name)->required();
    array->add_option("--rows", rows)->capture_default_str();
    array->add_option("--cols", cols)->capture_default_str();
    array->add_flag("--tsv", tsv, "Tab-separated output");

    fs::path sample_file;
    std::string save_as;
    auto* guess = app.add_subcommand("guess", "Guess an automaton for sampled (i, value) pairs");
    guess->add_option("--samples", sample_file)->required();
    guess->add_option("--save", save_as, "Also store the result under this name");

    std::string dot_name;
    auto* dot = app.add_subcommand("export-dot", "Write an automaton in DOT format");
    dot->add_option("name", dot_name)->required();

    fs::path source_dir = ZECKIT_SOURCE_DIR;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("--source-dir", source_dir, "Checkout holding tests/data, data/ and scripts/")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*run) return cmd_run(g, script);
        if (*prove) return cmd_prove(g, prove_name, samples);
        if (*array) return cmd_array(array_name, rows, cols, tsv);
        if (*guess) return cmd_guess(g, sample_file, save_as);
        if (*dot) return cmd_export_dot(g, dot_name);
        if (*selftest) return cmd_selftest(source_dir, fs::canonical("/proc/self/exe"));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SampleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFalse;
    }
    return kUsage;
}
