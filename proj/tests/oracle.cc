#include "oracle.hh"

#include <microgringo/printer.hh>

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace mg::test {

namespace {

// ---------------------------------------------------------------------------
// dependency analysis, reimplemented with a reachability matrix

bool head_feeds(const Rule &from, const Literal &l, bool positive_only) {
    const auto *atom = l.symbolic();
    if (atom == nullptr) { return false; }
    if (positive_only && l.negated) { return false; }
    return unify(rename_apart(from.head), rename_apart(*atom)).has_value();
}

bool edge_between(const Rule &from, const Rule &to, bool positive_only) {
    return std::any_of(to.body.begin(), to.body.end(), [&](const Literal &l) {
        return head_feeds(from, l, positive_only);
    });
}

// SCCs of the sub-graph over `nodes`, in topological order; ties broken by
// the smallest contained node.
std::vector<std::vector<int>> ordered_sccs(const std::vector<int> &nodes,
                                           const std::function<bool(int, int)> &edge) {
    std::size_t n = nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && edge(nodes[i], nodes[j])) { reach[i][j] = true; }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][k] && reach[k][j]) { reach[i][j] = true; }
            }
        }
    }

    std::vector<int> group(n, -1);
    std::vector<std::vector<std::size_t>> sccs;
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) { continue; }
        std::vector<std::size_t> members{i};
        group[i] = static_cast<int>(sccs.size());
        for (std::size_t j = i + 1; j < n; ++j) {
            if (group[j] < 0 && reach[i][j] && reach[j][i]) {
                group[j] = group[i];
                members.push_back(j);
            }
        }
        sccs.push_back(std::move(members));
    }

    // Kahn's algorithm over the condensation, smallest source rule first
    std::vector<bool> emitted(sccs.size(), false);
    std::vector<std::vector<int>> order;
    for (std::size_t round = 0; round < sccs.size(); ++round) {
        int best = -1;
        for (std::size_t s = 0; s < sccs.size(); ++s) {
            if (emitted[s]) { continue; }
            bool ready = true;
            for (std::size_t t = 0; t < sccs.size(); ++t) {
                if (t == s || emitted[t]) { continue; }
                for (std::size_t i : sccs[t]) {
                    for (std::size_t j : sccs[s]) {
                        if (reach[i][j] && !(reach[j][i])) { ready = false; }
                    }
                }
            }
            if (!ready) { continue; }
            if (best < 0 || nodes[sccs[s].front()] < nodes[sccs[static_cast<std::size_t>(best)]
                                                               .front()]) {
                best = static_cast<int>(s);
            }
        }
        emitted[static_cast<std::size_t>(best)] = true;
        std::vector<int> rules;
        for (std::size_t i : sccs[static_cast<std::size_t>(best)]) {
            rules.push_back(nodes[i]);
        }
        std::sort(rules.begin(), rules.end());
        order.push_back(std::move(rules));
    }
    return order;
}

struct OracleComponent {
    std::vector<int> rule_indices;
};

std::vector<OracleComponent> oracle_components(const Program &p) {
    std::vector<int> all;
    for (std::size_t i = 0; i < p.rules.size(); ++i) { all.push_back(static_cast<int>(i)); }
    auto full = ordered_sccs(all, [&p](int a, int b) {
        return edge_between(p.rules[static_cast<std::size_t>(a)],
                            p.rules[static_cast<std::size_t>(b)], false);
    });
    std::vector<OracleComponent> out;
    for (const auto &scc : full) {
        auto refined = ordered_sccs(scc, [&p](int a, int b) {
            return edge_between(p.rules[static_cast<std::size_t>(a)],
                                p.rules[static_cast<std::size_t>(b)], true);
        });
        for (auto &sub : refined) { out.push_back({std::move(sub)}); }
    }
    return out;
}

// is the body atom pattern recursive for component k: does it unify with the
// head of any rule in components k and later?
bool pattern_recursive(const Program &p, const std::vector<OracleComponent> &components,
                       std::size_t k, const SymbolicAtom &pattern) {
    for (std::size_t c = k; c < components.size(); ++c) {
        for (int ri : components[c].rule_indices) {
            const Rule &r = p.rules[static_cast<std::size_t>(ri)];
            if (unify(rename_apart(r.head), rename_apart(pattern)).has_value()) {
                return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// naive evaluation

struct State {
    std::vector<SymbolicAtom> atom_list; // insertion order, facts included
    std::unordered_set<std::string> atoms;
    std::unordered_set<std::string> facts;
    std::vector<Rule> emitted;
    std::unordered_set<std::string> emitted_keys;
    bool changed = false;

    void add_atom(const SymbolicAtom &a) {
        if (atoms.insert(to_string(a)).second) {
            atom_list.push_back(a);
            changed = true;
        }
    }
    void add_fact(const SymbolicAtom &a) {
        if (facts.insert(to_string(a)).second) { changed = true; }
    }
    void emit(Rule r) {
        std::vector<std::string> body;
        for (const auto &l : r.body) { body.push_back(to_string(l)); }
        std::sort(body.begin(), body.end());
        std::string key = to_string(r.head) + "\x1f";
        for (const auto &b : body) { key += b + "\x1f"; }
        if (emitted_keys.insert(std::move(key)).second) {
            emitted.push_back(std::move(r));
            changed = true;
        }
    }
};

// every substitution grounding the positive symbolic body literals of r
// against the current atoms, brute force
void enumerate(const Rule &r, std::size_t body_idx, Substitution subst, State &state,
               const std::vector<bool> &recursive_negatives) {
    if (body_idx == r.body.size()) {
        std::vector<Literal> body;
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            const Literal &l = r.body[i];
            if (const auto *cmp = l.comparison()) {
                if (!relation_holds(cmp->rel, subst.apply(cmp->lhs), subst.apply(cmp->rhs))) {
                    return;
                }
                continue;
            }
            SymbolicAtom inst = subst.apply(*l.symbolic());
            if (l.negated) {
                if (state.facts.count(to_string(inst)) > 0) { return; }
                if (!l.marked &&
                    (recursive_negatives[i] || state.atoms.count(to_string(inst)) > 0)) {
                    body.push_back(Literal{std::move(inst), true, false, Adorn::None});
                }
                continue;
            }
            if (!l.marked && state.facts.count(to_string(inst)) == 0) {
                body.push_back(Literal{std::move(inst), false, false, Adorn::None});
            }
        }
        SymbolicAtom head = subst.apply(r.head);
        if (head.pred == false_pred()) {
            state.emit(Rule{std::move(head), std::move(body), r.origin});
            return;
        }
        if (body.empty()) { state.add_fact(head); }
        state.emit(Rule{head, std::move(body), r.origin});
        state.add_atom(head);
        return;
    }

    const Literal &l = r.body[body_idx];
    const auto *atom = l.symbolic();
    if (atom == nullptr || l.negated) {
        enumerate(r, body_idx + 1, std::move(subst), state, recursive_negatives);
        return;
    }
    // snapshot the list length: atoms added during this enumeration are
    // picked up by a later fixpoint pass
    std::size_t limit = state.atom_list.size();
    for (std::size_t i = 0; i < limit; ++i) {
        // copy: recursion below may grow (and reallocate) the atom list
        SymbolicAtom candidate = state.atom_list[i];
        if (candidate.pred != atom->pred || candidate.args.size() != atom->args.size()) {
            continue;
        }
        Substitution extended = subst;
        bool ok = true;
        for (std::size_t a = 0; ok && a < atom->args.size(); ++a) {
            ok = match_term(atom->args[a], candidate.args[a], extended);
        }
        if (ok) { enumerate(r, body_idx + 1, std::move(extended), state, recursive_negatives); }
    }
}

} // namespace

OracleResult oracle_ground(const Program &p) {
    State state;
    for (const auto &f : p.facts) {
        state.add_atom(f);
        state.add_fact(f);
        state.emit(Rule{f, {}, -1});
    }

    auto components = oracle_components(p);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const auto &component = components[k];
        // recursion flags for the negative body literals of each member rule
        std::vector<std::vector<bool>> negatives;
        for (int ri : component.rule_indices) {
            const Rule &r = p.rules[static_cast<std::size_t>(ri)];
            std::vector<bool> flags(r.body.size(), false);
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                const auto *atom = r.body[i].symbolic();
                if (atom != nullptr && r.body[i].negated) {
                    flags[i] = pattern_recursive(p, components, k, *atom);
                }
            }
            negatives.push_back(std::move(flags));
        }

        do {
            state.changed = false;
            for (std::size_t m = 0; m < component.rule_indices.size(); ++m) {
                const Rule &r = p.rules[static_cast<std::size_t>(component.rule_indices[m])];
                enumerate(r, 0, Substitution{}, state, negatives[m]);
            }
        } while (state.changed);
    }

    OracleResult result;
    result.rules = std::move(state.emitted);
    result.atoms = {state.atoms.begin(), state.atoms.end()};
    result.facts = {state.facts.begin(), state.facts.end()};
    return result;
}

std::set<std::string> canonicalize(const std::vector<Rule> &rules,
                                   const std::set<std::string> &facts) {
    std::set<std::string> out;
    for (const auto &r : rules) {
        bool constraint = r.head.pred == false_pred();
        if (!constraint && facts.count(to_string(r.head)) > 0) { continue; }
        std::vector<std::string> body;
        bool blocked = false;
        for (const auto &l : r.body) {
            const auto *atom = l.symbolic();
            if (atom == nullptr) { continue; }
            std::string s = to_string(*atom);
            if (l.negated) {
                if (facts.count(s) > 0) {
                    blocked = true;
                    break;
                }
                body.push_back("not " + s);
            }
            else if (facts.count(s) == 0) {
                body.push_back(std::move(s));
            }
        }
        if (blocked) { continue; }
        std::sort(body.begin(), body.end());
        std::string text = constraint ? ":-" : to_string(r.head);
        for (const auto &b : body) {
            text += '|';
            text += b;
        }
        out.insert(std::move(text));
    }
    return out;
}

std::string random_program(std::mt19937 &rng) {
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    const char *all_consts[] = {"a", "b", "c", "d"};
    int nconsts = pick(1, 4);
    const char *preds[] = {"p", "q", "r"};
    int arity[3] = {pick(0, 2), pick(0, 2), pick(0, 2)};
    const char *vars[] = {"X", "Y", "Z"};

    std::ostringstream out;
    auto constant = [&]() { return std::string(all_consts[pick(0, nconsts - 1)]); };

    int nfacts = pick(1, 6);
    for (int i = 0; i < nfacts; ++i) {
        int pr = pick(0, 2);
        out << preds[pr];
        if (arity[pr] > 0) {
            out << "(";
            for (int a = 0; a < arity[pr]; ++a) { out << (a > 0 ? "," : "") << constant(); }
            out << ")";
        }
        out << ". ";
    }
    out << "\n";

    int nrules = pick(0, 6);
    for (int i = 0; i < nrules; ++i) {
        int head = pick(0, 2);
        std::vector<std::string> bound;
        std::vector<std::string> body;

        int npos = pick(1, 3);
        for (int b = 0; b < npos; ++b) {
            int pr = pick(0, head); // stratum no higher than the head's
            std::string lit = preds[pr];
            if (arity[pr] > 0) {
                lit += "(";
                for (int a = 0; a < arity[pr]; ++a) {
                    if (a > 0) { lit += ","; }
                    if (pick(0, 2) > 0) {
                        std::string v = vars[pick(0, 2)];
                        bound.push_back(v);
                        lit += v;
                    }
                    else {
                        lit += constant();
                    }
                }
                lit += ")";
            }
            body.push_back(std::move(lit));
        }

        auto bound_term = [&]() {
            if (!bound.empty() && pick(0, 3) > 0) {
                return bound[static_cast<std::size_t>(
                    pick(0, static_cast<int>(bound.size()) - 1))];
            }
            return constant();
        };

        int nextra = pick(0, 2);
        for (int e = 0; e < nextra; ++e) {
            if (head > 0 && pick(0, 1) == 0) {
                // negation over a strictly lower predicate keeps strata intact
                int pr = pick(0, head - 1);
                std::string lit = "not ";
                lit += preds[pr];
                if (arity[pr] > 0) {
                    lit += "(";
                    for (int a = 0; a < arity[pr]; ++a) {
                        if (a > 0) { lit += ","; }
                        lit += bound_term();
                    }
                    lit += ")";
                }
                body.push_back(std::move(lit));
            }
            else {
                const char *rels[] = {"!=", "<", ">", "<=", ">="};
                std::string lhs = pick(0, 1) == 0 ? bound_term() : std::to_string(pick(0, 3));
                std::string rhs = pick(0, 1) == 0 ? bound_term() : std::to_string(pick(0, 3));
                body.push_back(lhs + " " + rels[pick(0, 4)] + " " + rhs);
            }
        }

        out << preds[head];
        if (arity[head] > 0) {
            out << "(";
            for (int a = 0; a < arity[head]; ++a) { out << (a > 0 ? "," : "") << bound_term(); }
            out << ")";
        }
        out << " :- ";
        for (std::size_t b = 0; b < body.size(); ++b) { out << (b > 0 ? ", " : "") << body[b]; }
        out << ".\n";
    }
    return out.str();
}

} // namespace mg::test
