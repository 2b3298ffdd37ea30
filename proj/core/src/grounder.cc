#include "microgringo/grounder.hh"

#include <algorithm>
#include <stdexcept>

namespace mg {

namespace {

bool is_positive_symbolic(const Literal &l) {
    return l.symbolic() != nullptr && !l.negated;
}

} // namespace

std::vector<PreparedRule> prepare_component(const Component &c) {
    std::vector<PreparedRule> result;
    for (const auto &r : c.rules) {
        std::vector<std::size_t> recursive;
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            const auto &lit = r.body[i];
            if (is_positive_symbolic(lit) && c.is_recursive_atom(*lit.symbolic())) {
                recursive.push_back(i);
            }
        }
        if (recursive.empty()) {
            Rule variant = r;
            for (auto &lit : variant.body) {
                if (is_positive_symbolic(lit)) { lit.adorn = Adorn::New; }
            }
            variant.body = order_body(variant.body);
            result.push_back({std::move(variant)});
            continue;
        }
        // j-th variant: atom j new, atoms before it old, the rest all
        for (std::size_t j = 0; j < recursive.size(); ++j) {
            Rule variant = r;
            for (auto &lit : variant.body) {
                if (is_positive_symbolic(lit)) { lit.adorn = Adorn::All; }
            }
            for (std::size_t i = 0; i < recursive.size(); ++i) {
                variant.body[recursive[i]].adorn = i < j    ? Adorn::Old
                                                   : i == j ? Adorn::New
                                                            : Adorn::All;
            }
            variant.body = order_body(variant.body);
            result.push_back({std::move(variant)});
        }
    }
    return result;
}

std::vector<Literal> order_body(const std::vector<Literal> &body) {
    std::vector<Literal> ordered;
    std::vector<bool> used(body.size(), false);
    std::vector<SymbolId> bound;

    auto is_bound = [&bound](const Literal &l) {
        std::vector<SymbolId> vars;
        collect_variables(l, vars);
        return std::all_of(vars.begin(), vars.end(), [&bound](SymbolId v) {
            return std::find(bound.begin(), bound.end(), v) != bound.end();
        });
    };
    auto unbound_count = [&bound](const Literal &l) {
        std::vector<SymbolId> vars;
        collect_variables(l, vars);
        std::size_t n = 0;
        for (SymbolId v : vars) {
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) { ++n; }
        }
        return n;
    };

    while (ordered.size() < body.size()) {
        int best = -1;
        int best_class = 3;
        std::size_t best_unbound = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (used[i]) { continue; }
            const auto &lit = body[i];
            int cls;
            if (!is_positive_symbolic(lit)) {
                if (!is_bound(lit)) { continue; } // not yet evaluable
                cls = 0;
            }
            else {
                cls = lit.adorn == Adorn::New ? 1 : 2;
            }
            std::size_t ub = unbound_count(lit);
            if (cls < best_class || (cls == best_class && cls == 2 && ub < best_unbound)) {
                best = static_cast<int>(i);
                best_class = cls;
                best_unbound = ub;
            }
        }
        if (best < 0) { throw std::logic_error("order_body: unsafe rule body"); }
        used[static_cast<std::size_t>(best)] = true;
        std::vector<SymbolId> vars;
        collect_variables(body[static_cast<std::size_t>(best)], vars);
        for (SymbolId v : vars) {
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) { bound.push_back(v); }
        }
        ordered.push_back(body[static_cast<std::size_t>(best)]);
    }
    return ordered;
}

namespace {

View view_of(Adorn adorn) {
    switch (adorn) {
        case Adorn::New: { return View::New; }
        case Adorn::Old: { return View::Old; }
        default: { return View::All; }
    }
}

struct Frame {
    std::size_t idx;
    Substitution subst;
    std::vector<Literal> body;
};

Literal instance_literal(SymbolicAtom atom, bool negated) {
    return Literal{std::move(atom), negated, false, Adorn::None};
}

} // namespace

void ground_rule(const PreparedRule &pr, const Component &c, AtomStore &store,
                 GroundSink &sink) {
    const Rule &r = pr.rule;
    std::vector<Frame> stack;
    stack.push_back({0, Substitution{}, {}});

    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();

        if (frame.idx == r.body.size()) {
            sink.instance(r, frame.subst);
            SymbolicAtom head = frame.subst.apply(r.head);
            if (head.pred == false_pred()) {
                sink.rule(Rule{std::move(head), std::move(frame.body), r.origin});
                continue;
            }
            bool fact = frame.body.empty();
            if (fact) { store.mark_fact(head); }
            sink.rule(Rule{head, std::move(frame.body), r.origin});
            sink.derived(head, fact);
            continue;
        }

        const Literal &lit = r.body[frame.idx];
        if (const auto *cmp = lit.comparison()) {
            Term lhs = frame.subst.apply(cmp->lhs);
            Term rhs = frame.subst.apply(cmp->rhs);
            if (relation_holds(cmp->rel, lhs, rhs)) {
                ++frame.idx;
                stack.push_back(std::move(frame));
            }
            continue;
        }

        const auto *atom = lit.symbolic();
        if (lit.negated) {
            SymbolicAtom inst = frame.subst.apply(*atom);
            if (store.is_fact(inst)) { continue; } // can never hold
            if (!lit.marked && (c.is_recursive_atom(*atom) || store.contains(inst, View::All))) {
                frame.body.push_back(instance_literal(std::move(inst), true));
            }
            ++frame.idx;
            stack.push_back(std::move(frame));
            continue;
        }

        auto extensions = store.matches(*atom, frame.subst, view_of(lit.adorn));
        for (auto it = extensions.rbegin(); it != extensions.rend(); ++it) {
            Frame child{frame.idx + 1, std::move(*it), frame.body};
            SymbolicAtom inst = child.subst.apply(*atom);
            if (!lit.marked && !store.is_fact(inst)) {
                child.body.push_back(instance_literal(std::move(inst), false));
            }
            stack.push_back(std::move(child));
        }
    }
}

} // namespace mg
