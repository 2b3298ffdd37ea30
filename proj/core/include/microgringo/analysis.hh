#ifndef MICROGRINGO_ANALYSIS_HH
#define MICROGRINGO_ANALYSIS_HH

#include "microgringo/ast.hh"

#include <utility>
#include <vector>

namespace mg {

// An SCC of the positive-refined rule dependency graph together with its
// recursive body atoms.
struct Component {
    std::vector<Rule> rules;
    std::vector<SymbolicAtom> recursive_atoms;
    bool has_recursive_positive = false;

    bool is_recursive_atom(const SymbolicAtom &a) const;
};

// Edges (r1, r2) of the rule dependency graph: head(r1) unifies some body
// atom of r2 (positive atoms only when positive_only), rules renamed apart.
std::vector<std::pair<int, int>> dependency_edges(const Program &p, bool positive_only);

// Groups rules into components in topological order and classifies recursive
// atoms. Ties in the order are broken by first appearance in the source.
std::vector<Component> analyze_program(const Program &p);

} // namespace mg

#endif
