#ifndef MICROGRINGO_GROUNDER_HH
#define MICROGRINGO_GROUNDER_HH

#include "microgringo/analysis.hh"
#include "microgringo/store.hh"

#include <vector>

namespace mg {

// One adorned, reordered variant of a component rule.
struct PreparedRule {
    Rule rule;
};

// Semi-naive rule variants: one per recursive positive body atom with the
// new/old/all adornment scheme, a single all-new variant otherwise.
std::vector<PreparedRule> prepare_component(const Component &c);

// Selects a safe evaluation order: bound comparisons and negations first,
// then the new-adorned atom, then greedily by fewest unbound variables.
// Ties keep the source order.
std::vector<Literal> order_body(const std::vector<Literal> &body);

// Receives ground instances and derived head atoms during grounding.
class GroundSink {
public:
    virtual ~GroundSink() = default;
    virtual void rule(Rule ground) = 0;
    virtual void derived(const SymbolicAtom &head, bool fact) = 0;
    // Fires once per completed instantiation, before fact elision shapes the
    // emitted rule; lets callers audit the semi-naive non-repetition property.
    virtual void instance(const Rule &source, const Substitution &subst) {
        (void)source, (void)subst;
    }
};

// Grounds one prepared rule against the store. Fact heads are marked in the
// store immediately; table insertion is the caller's responsibility.
void ground_rule(const PreparedRule &r, const Component &c, AtomStore &store, GroundSink &sink);

} // namespace mg

#endif
