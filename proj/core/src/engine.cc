#include "microgringo/engine.hh"

#include "microgringo/printer.hh"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace mg {

LimitError::LimitError(std::size_t limit)
    : GroundingError("atom limit of " + std::to_string(limit) + " exceeded"), limit_(limit) {}

namespace {

// order-independent key over the body so that duplicates are detected
std::string canonical_key(const Rule &r) {
    std::vector<std::string> body;
    body.reserve(r.body.size());
    for (const auto &lit : r.body) { body.push_back(to_string(lit)); }
    std::sort(body.begin(), body.end());
    std::string key = to_string(r.head);
    key += ":-";
    for (const auto &b : body) {
        key += b;
        key += ';';
    }
    return key;
}

struct EngineSink : GroundSink {
    AtomStore &store;
    std::unordered_set<std::string> &seen;
    std::unordered_set<std::string> &component_seen;
    std::vector<Rule> &emitted;
    std::vector<Rule> &iteration_rules;
    std::vector<SymbolicAtom> &delta;
    std::size_t &intra_duplicates;
    TraceSink *trace;

    EngineSink(AtomStore &store, std::unordered_set<std::string> &seen,
               std::unordered_set<std::string> &component_seen, std::vector<Rule> &emitted,
               std::vector<Rule> &iteration_rules, std::vector<SymbolicAtom> &delta,
               std::size_t &intra_duplicates, TraceSink *trace)
        : store(store), seen(seen), component_seen(component_seen), emitted(emitted),
          iteration_rules(iteration_rules), delta(delta), intra_duplicates(intra_duplicates),
          trace(trace) {}

    void rule(Rule g) override {
        if (!seen.insert(canonical_key(g)).second) { return; }
        if (trace != nullptr) { trace->rule_emitted(g); }
        iteration_rules.push_back(g);
        emitted.push_back(std::move(g));
    }

    // duplicates are keyed per source rule and substitution, independent of
    // the adorned variant that produced the instantiation
    void instance(const Rule &source, const Substitution &s) override {
        std::vector<std::pair<SymbolId, Term>> bindings = s.bindings();
        std::sort(bindings.begin(), bindings.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        std::string key = std::to_string(source.origin);
        for (const auto &[var, value] : bindings) {
            key += '|';
            key += symbol_name(var);
            key += '=';
            key += to_string(value);
        }
        if (!component_seen.insert(std::move(key)).second) { ++intra_duplicates; }
    }

    void derived(const SymbolicAtom &head, bool fact) override {
        (void)fact; // fact heads are already marked in the store
        delta.push_back(head);
    }
};

void collect_aggregate_ids(const Component &c, const AggregateRegistry &registry,
                           std::vector<int> &nonrecursive, std::vector<int> &recursive) {
    std::vector<int> all, rec;
    for (const auto &r : c.rules) {
        if (const auto *info = registry.by_aggr_pred(r.head.pred)) { all.push_back(info->id); }
        const auto *info = registry.by_accu_pred(r.head.pred);
        if (info == nullptr) { continue; }
        for (const auto &lit : r.body) {
            const auto *atom = lit.symbolic();
            if (atom != nullptr && !lit.negated && !lit.marked && c.is_recursive_atom(*atom)) {
                rec.push_back(info->id);
                break;
            }
        }
    }
    auto dedup = [](std::vector<int> &v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(all);
    dedup(rec);
    for (int id : all) {
        bool is_rec = std::find(rec.begin(), rec.end(), id) != rec.end();
        (is_rec ? recursive : nonrecursive).push_back(id);
    }
}

} // namespace

std::string GroundingResult::text(bool facts_only) const {
    std::ostringstream out;
    for (const auto &r : rules) {
        if (facts_only && (!r.body.empty() || r.head.pred == false_pred())) { continue; }
        out << to_string(r) << '\n';
    }
    return out.str();
}

GroundingResult ground_program(const Program &p, const GroundingOptions &opts) {
    auto [rewritten, registry] = rewrite_program(p);
    for (const auto &info : registry) {
        if (info.name == AggrName::Min || info.name == AggrName::Max) {
            throw GroundingError("unsupported aggregate function " +
                                 aggr_name_string(info.name) +
                                 ": only #sum, #sum+, and #count can be grounded");
        }
    }

    GroundingResult result;
    result.registry = registry;

    AtomStore store;
    std::unordered_set<std::string> seen;
    std::vector<Rule> emitted;

    auto check_limit = [&opts, &store]() {
        if (opts.atom_limit != 0 && store.size() > opts.atom_limit) {
            throw LimitError(opts.atom_limit);
        }
    };

    for (const auto &f : p.facts) {
        if (store.insert(f, true)) {
            Rule fact_rule{f, {}, -1};
            seen.insert(canonical_key(fact_rule));
            emitted.push_back(std::move(fact_rule));
        }
    }
    check_limit();

    auto components = analyze_program(rewritten);
    result.stats.components = components.size();

    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const Component &comp = components[ci];
        if (opts.trace != nullptr) { opts.trace->component_start(ci, comp); }
        result.emissions.emplace_back();

        std::vector<int> ids_nonrec, ids_rec;
        collect_aggregate_ids(comp, registry, ids_nonrec, ids_rec);

        store.reset_generation();
        auto prepared = prepare_component(comp);
        std::unordered_set<std::string> component_seen;

        std::size_t iteration = 0;
        while (true) {
            ++iteration;
            std::vector<SymbolicAtom> delta;
            std::vector<Rule> iteration_rules;
            EngineSink sink{store,
                            seen,
                            component_seen,
                            emitted,
                            iteration_rules,
                            delta,
                            result.stats.intra_component_duplicates,
                            opts.trace};
            for (const auto &pr : prepared) {
                // without a positive body atom the instantiation is invariant
                // across iterations; the first pass already produced it all
                if (iteration > 1 &&
                    std::none_of(pr.rule.body.begin(), pr.rule.body.end(), [](const Literal &l) {
                        return l.symbolic() != nullptr && !l.negated;
                    })) {
                    continue;
                }
                ground_rule(pr, comp, store, sink);
            }

            auto all_known = [&store](const std::vector<SymbolicAtom> &atoms) {
                return std::all_of(atoms.begin(), atoms.end(), [&store](const SymbolicAtom &a) {
                    return store.contains(a, View::All);
                });
            };
            auto run_propagation = [&](const std::vector<int> &ids, bool recursive) {
                auto outcome = propagate_aggregates(ids, recursive, store, registry);
                ++result.stats.propagation_calls;
                for (const auto &a : outcome.new_facts) { store.mark_fact(a); }
                PropagationEvent event;
                event.recursive = recursive;
                for (const auto &a : outcome.delta) {
                    if (!store.contains(a, View::All)) { event.atoms.push_back(a); }
                }
                if (!event.atoms.empty()) {
                    result.propagation_events.push_back(event);
                    if (opts.trace != nullptr) { opts.trace->propagated(event); }
                }
                delta = std::move(outcome.delta);
            };
            if (!ids_nonrec.empty() && all_known(delta)) { run_propagation(ids_nonrec, false); }
            if (!ids_rec.empty() && all_known(delta)) { run_propagation(ids_rec, true); }

            store.advance_generation();
            std::vector<SymbolicAtom> fresh;
            for (const auto &a : delta) {
                if (store.insert(a)) {
                    fresh.push_back(a);
                    ++result.stats.atoms_derived;
                }
            }
            check_limit();

            result.emissions.back().push_back(std::move(iteration_rules));
            if (opts.trace != nullptr) { opts.trace->iteration_done(ci, iteration, fresh); }
            if (fresh.empty() || !comp.has_recursive_positive) { break; }
        }
        result.stats.iterations.push_back(iteration);
    }

    result.stats.rules_emitted = emitted.size();
    result.stats.facts_derived = store.fact_count();
    result.rules = assemble_aggregates(std::move(emitted), registry);
    result.inconsistent =
        std::any_of(result.rules.begin(), result.rules.end(), [](const Rule &r) {
            return r.head.pred == false_pred() && r.body.empty();
        });
    return result;
}

} // namespace mg
