#include <microgringo/engine.hh>
#include <microgringo/parser.hh>
#include <microgringo/printer.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

class StderrTrace : public mg::TraceSink {
public:
    void component_start(std::size_t index, const mg::Component &c) override {
        std::cerr << "% component " << index + 1 << "\n";
        for (const auto &r : c.rules) { std::cerr << "%   " << mg::to_string(r) << "\n"; }
        if (!c.recursive_atoms.empty()) {
            std::cerr << "%   recursive:";
            for (const auto &a : c.recursive_atoms) { std::cerr << " " << mg::to_string(a); }
            std::cerr << "\n";
        }
    }

    void iteration_done(std::size_t component, std::size_t iteration,
                        const std::vector<mg::SymbolicAtom> &fresh) override {
        (void)component;
        std::cerr << "% iteration " << iteration << ": {";
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            std::cerr << (i > 0 ? ", " : "") << mg::to_string(fresh[i]);
        }
        std::cerr << "}\n";
    }

    void propagated(const mg::PropagationEvent &event) override {
        std::cerr << "PropagateAggregates: {";
        for (std::size_t i = 0; i < event.atoms.size(); ++i) {
            std::cerr << (i > 0 ? ", " : "") << mg::to_string(event.atoms[i]);
        }
        std::cerr << "}\n";
    }

    void rule_emitted(const mg::Rule &r) override {
        std::cerr << "%   " << mg::to_string(r) << "\n";
    }
};

mg::Program parse_files(const std::vector<std::string> &paths) {
    mg::Program merged;
    for (const auto &path : paths) {
        std::ifstream in(path);
        if (!in) { throw std::runtime_error("cannot open '" + path + "'"); }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        mg::Program p = mg::parse_program(buffer.str(), path);
        for (auto &r : p.rules) { merged.rules.push_back(std::move(r)); }
        for (auto &f : p.facts) { merged.facts.push_back(std::move(f)); }
    }
    return merged;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"microgringo - grounder for logic programs with recursive aggregates"};
    std::vector<std::string> files;
    bool text = false, facts_only = false, trace = false, stats = false;
    std::size_t limit = 0;
    app.add_option("files", files, "input programs, concatenated in order")->required();
    app.add_flag("--text", text, "print the ground program (default)");
    app.add_flag("--facts-only", facts_only, "print only bodyless rules");
    app.add_flag("--trace", trace, "print grounding steps on standard error");
    app.add_flag("--stats", stats, "print grounding statistics on standard error");
    auto *limit_opt = app.add_option("--limit", limit, "abort once the store exceeds N atoms")
                          ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    if (limit_opt->count() == 0) {
        if (const char *env = std::getenv("MICROGRINGO_LIMIT")) {
            char *end = nullptr;
            unsigned long long value = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0' || value == 0) {
                std::cerr << "microgringo: invalid MICROGRINGO_LIMIT value '" << env << "'\n";
                return 1;
            }
            limit = static_cast<std::size_t>(value);
        }
    }

    try {
        mg::Program program = parse_files(files);
        StderrTrace tracer;
        mg::GroundingOptions opts;
        opts.atom_limit = limit;
        if (trace) { opts.trace = &tracer; }
        mg::GroundingResult result = mg::ground_program(program, opts);
        std::cout << result.text(facts_only);
        if (result.inconsistent) {
            std::cerr << "microgringo: info: program has no stable model\n";
        }
        if (stats) {
            std::cerr << "components   : " << result.stats.components << "\n";
            std::cerr << "iterations   :";
            for (auto n : result.stats.iterations) { std::cerr << " " << n; }
            std::cerr << "\n";
            std::cerr << "rules        : " << result.stats.rules_emitted << "\n";
            std::cerr << "atoms        : " << result.stats.atoms_derived << "\n";
            std::cerr << "facts        : " << result.stats.facts_derived << "\n";
            std::cerr << "propagations : " << result.stats.propagation_calls << "\n";
        }
        return 0;
    }
    catch (const mg::LimitError &e) {
        std::cerr << "microgringo: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e) {
        std::cerr << "microgringo: " << e.what() << "\n";
        return 1;
    }
}
