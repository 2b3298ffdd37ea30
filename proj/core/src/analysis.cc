#include "microgringo/analysis.hh"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace mg {

bool Component::is_recursive_atom(const SymbolicAtom &a) const {
    return std::any_of(recursive_atoms.begin(), recursive_atoms.end(),
                       [&a](const SymbolicAtom &r) { return r == a; });
}

namespace {

struct RuleGraph {
    // adjacency r1 -> successors r2
    std::vector<std::vector<int>> succ;
};

bool heads_unify(const SymbolicAtom &head, const SymbolicAtom &atom) {
    if (head.pred != atom.pred || head.args.size() != atom.args.size()) { return false; }
    return unify(rename_apart(head), rename_apart(atom)).has_value();
}

std::vector<std::pair<int, int>> edges_between(const std::vector<Rule> &rules,
                                               const std::vector<int> &indices,
                                               bool positive_only) {
    // candidate producers keyed by head (pred, arity)
    std::map<std::pair<SymbolId, std::size_t>, std::vector<int>> producers;
    for (int i : indices) {
        const auto &h = rules[i].head;
        producers[{h.pred, h.args.size()}].push_back(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int r2 : indices) {
        for (const auto &lit : rules[r2].body) {
            const auto *atom = lit.symbolic();
            if (atom == nullptr) { continue; }
            if (positive_only && lit.negated) { continue; }
            auto it = producers.find({atom->pred, atom->args.size()});
            if (it == producers.end()) { continue; }
            for (int r1 : it->second) {
                if (heads_unify(rules[r1].head, *atom)) { edges.emplace_back(r1, r2); }
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Tarjan over the given node subset; returns SCCs.
std::vector<std::vector<int>> sccs(const std::vector<int> &nodes,
                                   const std::vector<std::pair<int, int>> &edges) {
    std::map<int, std::vector<int>> succ;
    for (auto [a, b] : edges) { succ[a].push_back(b); }
    std::map<int, int> index, low;
    std::vector<int> stack;
    std::map<int, bool> on_stack;
    int counter = 0;
    std::vector<std::vector<int>> result;

    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : succ[v]) {
            if (index.find(w) == index.end()) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            }
            else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
    };
    for (int v : nodes) {
        if (index.find(v) == index.end()) { visit(v); }
    }
    return result;
}

// Topological order of the condensation, ties broken by the smallest rule
// index contained in a component.
std::vector<int> topo_order(const std::vector<std::vector<int>> &comps,
                            const std::vector<std::pair<int, int>> &edges) {
    std::map<int, int> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int v : comps[c]) { comp_of[v] = static_cast<int>(c); }
    }
    std::vector<int> indeg(comps.size(), 0);
    std::vector<std::vector<int>> succ(comps.size());
    for (auto [a, b] : edges) {
        int ca = comp_of[a], cb = comp_of[b];
        if (ca != cb) {
            succ[ca].push_back(cb);
            ++indeg[cb];
        }
    }
    using Entry = std::pair<int, int>; // (min rule index, component)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (indeg[c] == 0) { ready.emplace(comps[c].front(), static_cast<int>(c)); }
    }
    std::vector<int> order;
    while (!ready.empty()) {
        int c = ready.top().second;
        ready.pop();
        order.push_back(c);
        for (int d : succ[c]) {
            if (--indeg[d] == 0) { ready.emplace(comps[d].front(), d); }
        }
    }
    return order;
}

} // namespace

std::vector<std::pair<int, int>> dependency_edges(const Program &p, bool positive_only) {
    std::vector<int> indices(p.rules.size());
    for (std::size_t i = 0; i < indices.size(); ++i) { indices[i] = static_cast<int>(i); }
    return edges_between(p.rules, indices, positive_only);
}

std::vector<Component> analyze_program(const Program &p) {
    std::vector<int> all(p.rules.size());
    for (std::size_t i = 0; i < all.size(); ++i) { all[i] = static_cast<int>(i); }

    auto full_edges = edges_between(p.rules, all, false);
    auto full_sccs = sccs(all, full_edges);
    auto full_order = topo_order(full_sccs, full_edges);

    std::vector<bool> remaining(p.rules.size(), true);
    std::vector<Component> result;

    for (int ci : full_order) {
        const auto &comp_rules = full_sccs[ci];
        auto pos_edges = edges_between(p.rules, comp_rules, true);
        auto pos_sccs = sccs(comp_rules, pos_edges);
        auto pos_order = topo_order(pos_sccs, pos_edges);
        for (int pi : pos_order) {
            const auto &members = pos_sccs[pi];
            Component comp;
            // recursive atoms: body atoms unifying a head in this or a
            // not-yet-emitted component (the shrinking-set semantics)
            for (int r2 : members) {
                for (const auto &lit : p.rules[r2].body) {
                    const auto *atom = lit.symbolic();
                    if (atom == nullptr || comp.is_recursive_atom(*atom)) { continue; }
                    bool recursive = false;
                    for (std::size_t r1 = 0; r1 < p.rules.size() && !recursive; ++r1) {
                        if (remaining[r1] && heads_unify(p.rules[r1].head, *atom)) {
                            recursive = true;
                        }
                    }
                    if (recursive) { comp.recursive_atoms.push_back(*atom); }
                }
            }
            for (int r : members) {
                for (const auto &lit : p.rules[r].body) {
                    const auto *atom = lit.symbolic();
                    if (atom != nullptr && !lit.negated && comp.is_recursive_atom(*atom)) {
                        comp.has_recursive_positive = true;
                    }
                }
                comp.rules.push_back(p.rules[r]);
                remaining[r] = false;
            }
            result.push_back(std::move(comp));
        }
    }
    return result;
}

} // namespace mg
