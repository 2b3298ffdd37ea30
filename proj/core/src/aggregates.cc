#include "microgringo/aggregates.hh"

#include "microgringo/printer.hh"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace mg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw AggregateError("integer overflow in aggregate evaluation");
    }
    return out;
}

void reject_unsupported(AggrName name) {
    if (name == AggrName::Min || name == AggrName::Max) {
        throw AggregateError("#min and #max aggregates are not supported");
    }
}

std::int64_t positive_weight(const std::vector<Term> &tuple) {
    return std::max<std::int64_t>(weight(tuple), 0);
}

bool contains_tuple(const std::vector<std::vector<Term>> &tuples, const std::vector<Term> &t) {
    return std::find(tuples.begin(), tuples.end(), t) != tuples.end();
}

// the reachable value range over all T with fact <= T <= all
std::pair<std::int64_t, std::int64_t> bounds(AggrName name, const TupleSets &tuples) {
    std::int64_t min = 0, max = 0;
    switch (name) {
        case AggrName::Sum: {
            for (const auto &t : tuples.fact) {
                min = checked_add(min, weight(t));
            }
            max = min;
            for (const auto &t : tuples.all) {
                if (contains_tuple(tuples.fact, t)) { continue; }
                std::int64_t w = weight(t);
                if (w < 0) { min = checked_add(min, w); }
                else { max = checked_add(max, w); }
            }
            break;
        }
        case AggrName::SumPlus: {
            for (const auto &t : tuples.fact) { min = checked_add(min, positive_weight(t)); }
            for (const auto &t : tuples.all) { max = checked_add(max, positive_weight(t)); }
            break;
        }
        case AggrName::Count: {
            min = static_cast<std::int64_t>(tuples.fact.size());
            max = static_cast<std::int64_t>(tuples.all.size());
            break;
        }
        case AggrName::Min:
        case AggrName::Max: { reject_unsupported(name); }
    }
    return {min, max};
}

} // namespace

bool is_monotone(AggrName name, Relation rel) {
    return (name == AggrName::SumPlus || name == AggrName::Count) &&
           (rel == Relation::Geq || rel == Relation::Gt);
}

bool tuple_relevant(AggrName name, const std::vector<Term> &tuple) {
    switch (name) {
        case AggrName::Sum:
        case AggrName::SumPlus: { return weight(tuple) != 0; }
        default: { return true; }
    }
}

Term eval_aggregate(AggrName name, const std::vector<std::vector<Term>> &tuples) {
    reject_unsupported(name);
    std::int64_t value = 0;
    for (const auto &t : tuples) {
        switch (name) {
            case AggrName::Sum: {
                value = checked_add(value, weight(t));
                break;
            }
            case AggrName::SumPlus: {
                value = checked_add(value, positive_weight(t));
                break;
            }
            default: {
                value = checked_add(value, 1);
                break;
            }
        }
    }
    return Term::numeral(value);
}

bool satisfiable(AggrName name, Relation rel, const Term &guard, const TupleSets &tuples) {
    auto [min, max] = bounds(name, tuples);
    switch (rel) {
        case Relation::Geq:
        case Relation::Gt: { return relation_holds(rel, Term::numeral(max), guard); }
        case Relation::Leq:
        case Relation::Lt: { return relation_holds(rel, Term::numeral(min), guard); }
        case Relation::Neq: { break; }
    }
    return relation_holds(rel, Term::numeral(min), guard) ||
           relation_holds(rel, Term::numeral(max), guard);
}

PropagationOutcome propagate_aggregates(const std::vector<int> &ids, bool recursive,
                                        const AtomStore &store,
                                        const AggregateRegistry &registry) {
    PropagationOutcome outcome;
    for (int id : ids) {
        const AggregateInfo &info = registry.info(id);
        reject_unsupported(info.name);
        const auto &entries = store.table(info.accu_pred, info.global_vars.size() + 1);

        // instances in first-appearance order
        std::vector<std::vector<Term>> globals;
        std::vector<TupleSets> sets;
        for (const auto &entry : entries) {
            std::vector<Term> g(entry.atom.args.begin(), entry.atom.args.end() - 1);
            auto it = std::find(globals.begin(), globals.end(), g);
            std::size_t pos = static_cast<std::size_t>(it - globals.begin());
            if (it == globals.end()) {
                globals.push_back(std::move(g));
                sets.emplace_back();
            }
            const Term &payload = entry.atom.args.back();
            const auto *tuple = tuple_payload(payload);
            if (tuple == nullptr || !tuple_relevant(info.name, *tuple)) { continue; }
            sets[pos].all.push_back(*tuple);
            if (store.is_fact(entry.atom)) { sets[pos].fact.push_back(*tuple); }
        }

        for (std::size_t k = 0; k < globals.size(); ++k) {
            SymbolicAtom aggr{info.aggr_pred, globals[k]};
            Term guard = info.ground_guard(globals[k]);
            try {
                if (!satisfiable(info.name, info.rel, guard, sets[k])) { continue; }
                bool fact =
                    (is_monotone(info.name, info.rel) &&
                     relation_holds(info.rel, eval_aggregate(info.name, sets[k].fact), guard)) ||
                    (!recursive && sets[k].all.size() == sets[k].fact.size());
                if (fact) { outcome.new_facts.push_back(aggr); }
                outcome.delta.push_back(std::move(aggr));
            }
            catch (const AggregateError &e) {
                throw AggregateError(std::string(e.what()) + " for " + to_string(aggr));
            }
        }
    }
    return outcome;
}

std::vector<Rule> assemble_aggregates(std::vector<Rule> rules,
                                      const AggregateRegistry &registry) {
    if (registry.empty()) { return rules; }

    // reconstructed elements per ground instance, keyed by printed form
    std::map<std::string, std::vector<AggregateElement>> elements;
    for (const auto &r : rules) {
        const AggregateInfo *info = registry.by_accu_pred(r.head.pred);
        if (info == nullptr) { continue; }
        const auto *tuple = tuple_payload(r.head.args.back());
        if (tuple == nullptr) { continue; } // neutral instance, no element
        std::string key = to_string(SymbolicAtom{
            info->aggr_pred, {r.head.args.begin(), r.head.args.end() - 1}});
        elements[key].push_back(AggregateElement{*tuple, r.body});
    }

    std::vector<Rule> result;
    for (auto &r : rules) {
        if (registry.by_accu_pred(r.head.pred) != nullptr ||
            registry.by_aggr_pred(r.head.pred) != nullptr) {
            continue;
        }
        for (auto &lit : r.body) {
            const auto *atom = lit.symbolic();
            if (atom == nullptr) { continue; }
            const AggregateInfo *info = registry.by_aggr_pred(atom->pred);
            if (info == nullptr) { continue; }
            AggregateAtom aggr;
            aggr.id = info->id;
            aggr.name = info->name;
            aggr.rel = info->rel;
            aggr.guard = info->ground_guard(atom->args);
            auto it = elements.find(to_string(*atom));
            if (it != elements.end()) { aggr.elements = it->second; }
            lit.atom = std::move(aggr);
        }
        result.push_back(std::move(r));
    }
    return result;
}

} // namespace mg
