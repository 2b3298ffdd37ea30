#ifndef MICROGRINGO_AGGREGATES_HH
#define MICROGRINGO_AGGREGATES_HH

#include "microgringo/rewrite.hh"
#include "microgringo/store.hh"

#include <stdexcept>
#include <vector>

namespace mg {

class AggregateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fact and possible tuples accumulated for one aggregate instance.
struct TupleSets {
    std::vector<std::vector<Term>> fact; // subset of all
    std::vector<std::vector<Term>> all;
};

// Fact propagation is sound exactly for these combinations.
bool is_monotone(AggrName name, Relation rel);

// Tuples that cannot change the aggregate value are skipped.
bool tuple_relevant(AggrName name, const std::vector<Term> &tuple);

// The aggregate value over a set of tuples; sum, sum+, and count only.
// Throws AggregateError on signed overflow.
Term eval_aggregate(AggrName name, const std::vector<std::vector<Term>> &tuples);

// Whether some T with fact <= T <= all satisfies "value rel guard", decided
// through the reachable minimum and maximum.
bool satisfiable(AggrName name, Relation rel, const Term &guard, const TupleSets &tuples);

struct PropagationOutcome {
    std::vector<SymbolicAtom> delta;     // all satisfiable aggr atoms, in order
    std::vector<SymbolicAtom> new_facts; // subset promoted to facts
};

// Derives aggr_i(g) atoms for the given aggregate ids from the accumulated
// accu_i atoms in the store. The recursive flag disables the
// all-elements-are-facts promotion.
PropagationOutcome propagate_aggregates(const std::vector<int> &ids, bool recursive,
                                        const AtomStore &store,
                                        const AggregateRegistry &registry);

// Replaces aggr_i(g) body atoms by ground aggregates reconstructed from the
// accu_i rules and drops those rules.
std::vector<Rule> assemble_aggregates(std::vector<Rule> rules, const AggregateRegistry &registry);

} // namespace mg

#endif
