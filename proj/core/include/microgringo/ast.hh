#ifndef MICROGRINGO_AST_HH
#define MICROGRINGO_AST_HH

#include "microgringo/term.hh"

#include <optional>
#include <variant>
#include <vector>

namespace mg {

// The five comparison relations; equality is deliberately not representable.
enum class Relation { Neq, Lt, Gt, Leq, Geq };

bool relation_holds(Relation rel, const Term &lhs, const Term &rhs);

enum class AggrName { Sum, SumPlus, Count, Min, Max };

enum class Adorn : std::uint8_t { None, New, Old, All };

struct SymbolicAtom {
    SymbolId pred = 0;
    std::vector<Term> args;

    bool ground() const;
    bool operator==(const SymbolicAtom &other) const {
        return pred == other.pred && args == other.args;
    }
};

struct ComparisonAtom {
    Term lhs;
    Relation rel = Relation::Neq;
    Term rhs;

    bool operator==(const ComparisonAtom &other) const {
        return rel == other.rel && lhs == other.lhs && rhs == other.rhs;
    }
};

struct Literal;

struct AggregateElement {
    std::vector<Term> tuple;
    std::vector<Literal> condition; // simple literals only

    bool operator==(const AggregateElement &other) const;
};

struct AggregateAtom {
    int id = -1; // unique per occurrence, assigned by the rewriter
    AggrName name = AggrName::Sum;
    std::vector<AggregateElement> elements;
    Relation rel = Relation::Gt;
    Term guard;

    bool operator==(const AggregateAtom &other) const;
};

using Atom = std::variant<SymbolicAtom, ComparisonAtom, AggregateAtom>;

struct Literal {
    Atom atom;
    bool negated = false;
    bool marked = false;      // the dagger safety mark on rewritten bodies
    Adorn adorn = Adorn::None;

    bool operator==(const Literal &other) const;

    const SymbolicAtom *symbolic() const { return std::get_if<SymbolicAtom>(&atom); }
    SymbolicAtom *symbolic() { return std::get_if<SymbolicAtom>(&atom); }
    const ComparisonAtom *comparison() const { return std::get_if<ComparisonAtom>(&atom); }
    const AggregateAtom *aggregate() const { return std::get_if<AggregateAtom>(&atom); }
};

struct Rule {
    SymbolicAtom head; // the reserved false atom for integrity constraints
    std::vector<Literal> body;
    int origin = -1; // index of the source rule this one was derived from

    bool is_constraint() const;
};

struct Program {
    std::vector<Rule> rules;
    std::vector<SymbolicAtom> facts; // ground, duplicate-free, in source order
};

// Reserved head atom for integrity constraints; never enters any store.
SymbolId false_pred();
SymbolicAtom false_atom();

// Reserved encoding of accumulator payloads: accu_i(x, tuple(t)) and
// accu_i(x, neutral).
Term neutral_term();
Term tuple_term(const std::vector<Term> &tuple);
bool is_neutral_term(const Term &t);
// Returns the wrapped tuple if t is of form tuple(...), nullptr otherwise.
const std::vector<Term> *tuple_payload(const Term &t);

// weight(t): the integer of the first element when it is a numeral, else 0.
std::int64_t weight(const std::vector<Term> &tuple);

// Substitutions map variables to ground terms. Matches computed against a
// store are always minimal extensions of their input substitution.
class Substitution {
public:
    const Term *lookup(SymbolId var) const;
    void bind(SymbolId var, Term t);
    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }
    const std::vector<std::pair<SymbolId, Term>> &bindings() const { return bindings_; }

    Term apply(const Term &t) const;
    SymbolicAtom apply(const SymbolicAtom &a) const;
    Literal apply(const Literal &l) const;

    bool operator==(const Substitution &other) const;

private:
    std::vector<std::pair<SymbolId, Term>> bindings_;
};

// Structural match of a (possibly non-ground) pattern against a ground term,
// extending subst. Returns false and leaves subst in an unspecified state on
// failure; callers work on a copy per attempt.
bool match_term(const Term &pattern, const Term &ground, Substitution &subst);

// Most general unifier with occurs check. The caller renames the two atoms
// apart beforehand.
std::optional<Substitution> unify(const SymbolicAtom &a, const SymbolicAtom &b);

// Renames every variable in the rule to a globally fresh one.
Rule rename_apart(const Rule &r);
SymbolicAtom rename_apart(const SymbolicAtom &a);

std::size_t hash_atom(const SymbolicAtom &a);
void collect_variables(const Literal &l, std::vector<SymbolId> &out);
void collect_variables(const Atom &a, std::vector<SymbolId> &out);

struct SymbolicAtomHash {
    std::size_t operator()(const SymbolicAtom &a) const { return hash_atom(a); }
};

} // namespace mg

#endif
