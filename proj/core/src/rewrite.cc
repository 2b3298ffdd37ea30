#include "microgringo/rewrite.hh"

#include <algorithm>
#include <string>

namespace mg {

namespace {

void push_unique(std::vector<SymbolId> &vars, const std::vector<SymbolId> &add) {
    for (SymbolId v : add) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) { vars.push_back(v); }
    }
}

// head variables, variables of simple body literals, and aggregate guard
// variables; element-local variables are excluded
std::vector<SymbolId> global_variables(const Rule &r) {
    std::vector<SymbolId> vars, tmp;
    for (const auto &arg : r.head.args) { arg.collect_variables(tmp); }
    push_unique(vars, tmp);
    for (const auto &lit : r.body) {
        tmp.clear();
        if (const auto *aggr = lit.aggregate()) { aggr->guard.collect_variables(tmp); }
        else { collect_variables(lit, tmp); }
        push_unique(vars, tmp);
    }
    return vars;
}

// variables of the occurrence in first-occurrence order, restricted to the
// rule's global variables
std::vector<SymbolId> aggregate_globals(const AggregateAtom &aggr,
                                        const std::vector<SymbolId> &globals) {
    std::vector<SymbolId> seen;
    for (const auto &elem : aggr.elements) {
        for (const auto &t : elem.tuple) { t.collect_variables(seen); }
        for (const auto &lit : elem.condition) { collect_variables(lit, seen); }
    }
    aggr.guard.collect_variables(seen);
    std::vector<SymbolId> result;
    for (SymbolId v : seen) {
        bool global = std::find(globals.begin(), globals.end(), v) != globals.end();
        bool fresh = std::find(result.begin(), result.end(), v) == result.end();
        if (global && fresh) { result.push_back(v); }
    }
    return result;
}

std::vector<Term> var_terms(const std::vector<SymbolId> &vars) {
    std::vector<Term> out;
    out.reserve(vars.size());
    for (SymbolId v : vars) { out.push_back(Term::variable(v)); }
    return out;
}

Literal falsum() {
    return Literal{ComparisonAtom{Term::numeral(0), Relation::Gt, Term::numeral(0)}, false,
                   false, Adorn::None};
}

// the simple body literals of r that do not occur in cond, marked as safe
std::vector<Literal> marked_rest(const Rule &r, const std::vector<Literal> &cond) {
    std::vector<Literal> out;
    for (const auto &lit : r.body) {
        if (lit.aggregate() != nullptr) { continue; }
        bool in_cond = std::any_of(cond.begin(), cond.end(),
                                   [&lit](const Literal &c) { return c == lit; });
        if (in_cond) { continue; }
        Literal copy = lit;
        copy.marked = true;
        out.push_back(copy);
    }
    return out;
}

} // namespace

Term AggregateInfo::ground_guard(const std::vector<Term> &g) const {
    Substitution subst;
    for (std::size_t i = 0; i < global_vars.size() && i < g.size(); ++i) {
        subst.bind(global_vars[i], g[i]);
    }
    return subst.apply(guard);
}

int AggregateRegistry::add(AggregateInfo info) {
    info.id = static_cast<int>(infos_.size()) + 1;
    std::string suffix = std::to_string(info.id);
    info.aggr_pred = intern("#aggr" + suffix);
    info.accu_pred = intern("#accu" + suffix);
    infos_.push_back(std::move(info));
    return infos_.back().id;
}

const AggregateInfo *AggregateRegistry::by_accu_pred(SymbolId pred) const {
    for (const auto &info : infos_) {
        if (info.accu_pred == pred) { return &info; }
    }
    return nullptr;
}

const AggregateInfo *AggregateRegistry::by_aggr_pred(SymbolId pred) const {
    for (const auto &info : infos_) {
        if (info.aggr_pred == pred) { return &info; }
    }
    return nullptr;
}

Term aggregate_neutral_value(AggrName name) {
    switch (name) {
        case AggrName::Sum:
        case AggrName::SumPlus:
        case AggrName::Count: { return Term::numeral(0); }
        case AggrName::Min:
        case AggrName::Max: { break; }
    }
    // the value on the empty set for minima; maxima are rejected before
    // this value can matter
    return Term::supremum();
}

std::pair<Program, AggregateRegistry> rewrite_program(const Program &p) {
    Program out;
    out.facts = p.facts;
    AggregateRegistry registry;

    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const Rule &r = p.rules[ri];
        int origin = r.origin >= 0 ? r.origin : static_cast<int>(ri);
        auto globals = global_variables(r);

        Rule host;
        host.head = r.head;
        host.origin = origin;
        std::vector<Rule> extra;

        for (const auto &lit : r.body) {
            const auto *aggr = lit.aggregate();
            if (aggr == nullptr) {
                host.body.push_back(lit);
                continue;
            }
            AggregateInfo info;
            info.name = aggr->name;
            info.rel = aggr->rel;
            info.guard = aggr->guard;
            info.global_vars = aggregate_globals(*aggr, globals);
            info.negated = lit.negated;
            info.elements = aggr->elements;
            int id = registry.add(info);
            const AggregateInfo &stored = registry.info(id);

            auto x = var_terms(stored.global_vars);
            host.body.push_back(Literal{SymbolicAtom{stored.aggr_pred, x}, lit.negated,
                                        false, Adorn::None});

            // neutral rule: the aggregate value on no tuples against the guard
            Rule neutral;
            neutral.origin = origin;
            auto accu_args = x;
            accu_args.push_back(neutral_term());
            neutral.head = SymbolicAtom{stored.accu_pred, accu_args};
            neutral.body.push_back(Literal{
                ComparisonAtom{aggregate_neutral_value(aggr->name), aggr->rel, aggr->guard},
                false, false, Adorn::None});
            for (auto &b : marked_rest(r, {})) { neutral.body.push_back(std::move(b)); }
            extra.push_back(std::move(neutral));

            // one accumulator rule per element
            for (const auto &elem : aggr->elements) {
                Rule accu;
                accu.origin = origin;
                auto args = x;
                args.push_back(tuple_term(elem.tuple));
                accu.head = SymbolicAtom{stored.accu_pred, args};
                accu.body = elem.condition;
                for (auto &b : marked_rest(r, elem.condition)) {
                    accu.body.push_back(std::move(b));
                }
                extra.push_back(std::move(accu));
            }

            // never-firing rule that records the aggr <- accu dependency
            Rule dep;
            dep.origin = origin;
            dep.head = SymbolicAtom{stored.aggr_pred, x};
            auto dep_args = x;
            dep_args.push_back(Term::variable(fresh_symbol("Anon")));
            dep.body.push_back(
                Literal{SymbolicAtom{stored.accu_pred, dep_args}, false, false, Adorn::None});
            dep.body.push_back(falsum());
            extra.push_back(std::move(dep));
        }

        out.rules.push_back(std::move(host));
        for (auto &e : extra) { out.rules.push_back(std::move(e)); }
    }
    return {std::move(out), std::move(registry)};
}

} // namespace mg
