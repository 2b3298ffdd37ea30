#ifndef MICROGRINGO_REWRITE_HH
#define MICROGRINGO_REWRITE_HH

#include "microgringo/ast.hh"

#include <utility>
#include <vector>

namespace mg {

// One aggregate occurrence: its function, relation, guard template, global
// variable tuple, sign, and element templates.
struct AggregateInfo {
    int id = 0;
    AggrName name = AggrName::Sum;
    Relation rel = Relation::Gt;
    Term guard;
    std::vector<SymbolId> global_vars;
    bool negated = false;
    std::vector<AggregateElement> elements;
    SymbolId aggr_pred = 0;
    SymbolId accu_pred = 0;

    // guard with the global variables replaced by the ground tuple g
    Term ground_guard(const std::vector<Term> &g) const;
};

class AggregateRegistry {
public:
    int add(AggregateInfo info);
    const AggregateInfo &info(int id) const { return infos_.at(static_cast<std::size_t>(id - 1)); }
    const AggregateInfo *by_accu_pred(SymbolId pred) const;
    const AggregateInfo *by_aggr_pred(SymbolId pred) const;
    std::size_t size() const { return infos_.size(); }
    bool empty() const { return infos_.empty(); }
    auto begin() const { return infos_.begin(); }
    auto end() const { return infos_.end(); }

private:
    std::vector<AggregateInfo> infos_;
};

// Decomposes every aggregate occurrence into normal rules over fresh
// aggr_i/accu_i predicates; the result is a normal program.
std::pair<Program, AggregateRegistry> rewrite_program(const Program &p);

// The value of an aggregate function on the empty tuple set.
Term aggregate_neutral_value(AggrName name);

} // namespace mg

#endif
