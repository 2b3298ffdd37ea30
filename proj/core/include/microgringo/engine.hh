#ifndef MICROGRINGO_ENGINE_HH
#define MICROGRINGO_ENGINE_HH

#include "microgringo/aggregates.hh"
#include "microgringo/analysis.hh"
#include "microgringo/grounder.hh"
#include "microgringo/rewrite.hh"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mg {

class GroundingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The configured atom limit was exceeded; reported separately so drivers
// can exit with a distinct status.
class LimitError : public GroundingError {
public:
    explicit LimitError(std::size_t limit);
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

struct Stats {
    std::size_t components = 0;
    std::vector<std::size_t> iterations; // per component
    std::size_t rules_emitted = 0;
    std::size_t atoms_derived = 0;
    std::size_t facts_derived = 0;
    std::size_t propagation_calls = 0;
    // rules suppressed because the same instance was already emitted in the
    // same component fixpoint; the semi-naive split keeps this at zero
    std::size_t intra_component_duplicates = 0;
};

struct PropagationEvent {
    std::vector<SymbolicAtom> atoms; // newly derived aggregate atoms
    bool recursive = false;
};

// Observer for the grounding process; all callbacks default to no-ops.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void component_start(std::size_t index, const Component &c) { (void)index, (void)c; }
    virtual void iteration_done(std::size_t component, std::size_t iteration,
                                const std::vector<SymbolicAtom> &fresh) {
        (void)component, (void)iteration, (void)fresh;
    }
    virtual void propagated(const PropagationEvent &event) { (void)event; }
    virtual void rule_emitted(const Rule &r) { (void)r; }
};

struct GroundingOptions {
    std::size_t atom_limit = 0; // 0 means unlimited
    TraceSink *trace = nullptr;
};

struct GroundingResult {
    // the assembled ground program: input facts first, then emission order;
    // facts are rules with empty bodies
    std::vector<Rule> rules;
    AggregateRegistry registry;
    Stats stats;
    std::vector<PropagationEvent> propagation_events;
    // emitted rule instances per component and iteration, pre-assembly
    std::vector<std::vector<std::vector<Rule>>> emissions;
    bool inconsistent = false; // an unconditional integrity constraint fired

    std::string text(bool facts_only = false) const;
};

GroundingResult ground_program(const Program &p, const GroundingOptions &opts = {});

} // namespace mg

#endif
