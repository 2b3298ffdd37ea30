#include "microgringo/ast.hh"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace mg {

bool relation_holds(Relation rel, const Term &lhs, const Term &rhs) {
    Order o = compare_ground(lhs, rhs);
    switch (rel) {
        case Relation::Neq: return o != Order::Equal;
        case Relation::Lt: return o == Order::Less;
        case Relation::Gt: return o == Order::Greater;
        case Relation::Leq: return o != Order::Greater;
        case Relation::Geq: return o != Order::Less;
    }
    return false;
}

bool SymbolicAtom::ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term &t) { return t.ground(); });
}

bool AggregateElement::operator==(const AggregateElement &other) const {
    return tuple == other.tuple && condition == other.condition;
}

bool AggregateAtom::operator==(const AggregateAtom &other) const {
    return name == other.name && rel == other.rel && guard == other.guard &&
           elements == other.elements;
}

bool Literal::operator==(const Literal &other) const {
    return negated == other.negated && marked == other.marked && adorn == other.adorn &&
           atom == other.atom;
}

bool Rule::is_constraint() const { return head.pred == false_pred(); }

SymbolId false_pred() {
    static const SymbolId id = intern("#false");
    return id;
}

SymbolicAtom false_atom() { return SymbolicAtom{false_pred(), {}}; }

namespace {
SymbolId neutral_sym() {
    static const SymbolId id = intern("#neutral");
    return id;
}
SymbolId tuple_sym() {
    static const SymbolId id = intern("#tuple");
    return id;
}
} // namespace

Term neutral_term() { return Term::constant(neutral_sym()); }

Term tuple_term(const std::vector<Term> &tuple) {
    return Term::function(tuple_sym(), tuple);
}

bool is_neutral_term(const Term &t) {
    return t.kind() == Term::Kind::Constant && t.sym() == neutral_sym();
}

const std::vector<Term> *tuple_payload(const Term &t) {
    if (t.kind() == Term::Kind::Function && t.sym() == tuple_sym()) { return &t.args(); }
    return nullptr;
}

std::int64_t weight(const std::vector<Term> &tuple) {
    if (tuple.empty() || tuple.front().kind() != Term::Kind::Numeral) { return 0; }
    return tuple.front().value();
}

const Term *Substitution::lookup(SymbolId var) const {
    for (const auto &[v, t] : bindings_) {
        if (v == var) { return &t; }
    }
    return nullptr;
}

void Substitution::bind(SymbolId var, Term t) {
    bindings_.emplace_back(var, std::move(t));
}

Term Substitution::apply(const Term &t) const {
    switch (t.kind()) {
        case Term::Kind::Variable:
            if (const Term *bound = lookup(t.sym())) { return *bound; }
            return t;
        case Term::Kind::Function: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto &a : t.args()) { args.push_back(apply(a)); }
            return Term::function(t.sym(), std::move(args));
        }
        default: return t;
    }
}

SymbolicAtom Substitution::apply(const SymbolicAtom &a) const {
    SymbolicAtom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto &t : a.args) { out.args.push_back(apply(t)); }
    return out;
}

Literal Substitution::apply(const Literal &l) const {
    Literal out = l;
    if (auto *sym = std::get_if<SymbolicAtom>(&out.atom)) {
        *sym = apply(*sym);
    }
    else if (auto *cmp = std::get_if<ComparisonAtom>(&out.atom)) {
        cmp->lhs = apply(cmp->lhs);
        cmp->rhs = apply(cmp->rhs);
    }
    else if (auto *agg = std::get_if<AggregateAtom>(&out.atom)) {
        agg->guard = apply(agg->guard);
        for (auto &elem : agg->elements) {
            for (auto &t : elem.tuple) { t = apply(t); }
            for (auto &cond : elem.condition) { cond = apply(cond); }
        }
    }
    return out;
}

bool Substitution::operator==(const Substitution &other) const {
    if (bindings_.size() != other.bindings_.size()) { return false; }
    for (const auto &[v, t] : bindings_) {
        const Term *bound = other.lookup(v);
        if (bound == nullptr || !(*bound == t)) { return false; }
    }
    return true;
}

bool match_term(const Term &pattern, const Term &ground, Substitution &subst) {
    switch (pattern.kind()) {
        case Term::Kind::Variable: {
            if (const Term *bound = subst.lookup(pattern.sym())) { return *bound == ground; }
            subst.bind(pattern.sym(), ground);
            return true;
        }
        case Term::Kind::Function: {
            if (ground.kind() != Term::Kind::Function || pattern.sym() != ground.sym() ||
                pattern.args().size() != ground.args().size()) {
                return false;
            }
            for (std::size_t i = 0; i < pattern.args().size(); ++i) {
                if (!match_term(pattern.args()[i], ground.args()[i], subst)) { return false; }
            }
            return true;
        }
        default: return pattern == ground;
    }
}

namespace {

bool occurs(SymbolId var, const Term &t) {
    switch (t.kind()) {
        case Term::Kind::Variable: return t.sym() == var;
        case Term::Kind::Function:
            return std::any_of(t.args().begin(), t.args().end(),
                               [var](const Term &a) { return occurs(var, a); });
        default: return false;
    }
}

bool unify_terms(const Term &a, const Term &b, Substitution &subst) {
    Term ta = subst.apply(a);
    Term tb = subst.apply(b);
    if (ta == tb) { return true; }
    if (ta.kind() == Term::Kind::Variable) {
        if (occurs(ta.sym(), tb)) { return false; }
        // keep the substitution idempotent
        Substitution single;
        single.bind(ta.sym(), tb);
        Substitution updated;
        for (const auto &[v, t] : subst.bindings()) { updated.bind(v, single.apply(t)); }
        updated.bind(ta.sym(), tb);
        subst = std::move(updated);
        return true;
    }
    if (tb.kind() == Term::Kind::Variable) { return unify_terms(tb, ta, subst); }
    if (ta.kind() == Term::Kind::Function && tb.kind() == Term::Kind::Function &&
        ta.sym() == tb.sym() && ta.args().size() == tb.args().size()) {
        for (std::size_t i = 0; i < ta.args().size(); ++i) {
            if (!unify_terms(ta.args()[i], tb.args()[i], subst)) { return false; }
        }
        return true;
    }
    return false;
}

Term rename_term(const Term &t, std::unordered_map<SymbolId, SymbolId> &renaming) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto it = renaming.find(t.sym());
            if (it == renaming.end()) {
                it = renaming.emplace(t.sym(), fresh_symbol("V")).first;
            }
            return Term::variable(it->second);
        }
        case Term::Kind::Function: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto &a : t.args()) { args.push_back(rename_term(a, renaming)); }
            return Term::function(t.sym(), std::move(args));
        }
        default: return t;
    }
}

SymbolicAtom rename_atom(const SymbolicAtom &a, std::unordered_map<SymbolId, SymbolId> &renaming) {
    SymbolicAtom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto &t : a.args) { out.args.push_back(rename_term(t, renaming)); }
    return out;
}

} // namespace

std::optional<Substitution> unify(const SymbolicAtom &a, const SymbolicAtom &b) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) { return std::nullopt; }
    Substitution subst;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!unify_terms(a.args[i], b.args[i], subst)) { return std::nullopt; }
    }
    return subst;
}

SymbolicAtom rename_apart(const SymbolicAtom &a) {
    std::unordered_map<SymbolId, SymbolId> renaming;
    return rename_atom(a, renaming);
}

Rule rename_apart(const Rule &r) {
    std::unordered_map<SymbolId, SymbolId> renaming;
    Rule out;
    out.origin = r.origin;
    out.head = rename_atom(r.head, renaming);
    out.body.reserve(r.body.size());
    for (const auto &l : r.body) {
        Literal lit = l;
        if (auto *sym = std::get_if<SymbolicAtom>(&lit.atom)) {
            *sym = rename_atom(*sym, renaming);
        }
        else if (auto *cmp = std::get_if<ComparisonAtom>(&lit.atom)) {
            cmp->lhs = rename_term(cmp->lhs, renaming);
            cmp->rhs = rename_term(cmp->rhs, renaming);
        }
        else if (auto *agg = std::get_if<AggregateAtom>(&lit.atom)) {
            agg->guard = rename_term(agg->guard, renaming);
            for (auto &elem : agg->elements) {
                for (auto &t : elem.tuple) { t = rename_term(t, renaming); }
                for (auto &cond : elem.condition) {
                    if (auto *s = std::get_if<SymbolicAtom>(&cond.atom)) {
                        *s = rename_atom(*s, renaming);
                    }
                    else if (auto *c = std::get_if<ComparisonAtom>(&cond.atom)) {
                        c->lhs = rename_term(c->lhs, renaming);
                        c->rhs = rename_term(c->rhs, renaming);
                    }
                }
            }
        }
        out.body.push_back(std::move(lit));
    }
    return out;
}

std::size_t hash_atom(const SymbolicAtom &a) {
    auto mix = [](std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
    };
    std::size_t h = a.pred;
    h = mix(h, a.args.size());
    for (const auto &t : a.args) { h = mix(h, hash_term(t)); }
    return h;
}

void collect_variables(const Atom &a, std::vector<SymbolId> &out) {
    if (const auto *sym = std::get_if<SymbolicAtom>(&a)) {
        for (const auto &t : sym->args) { t.collect_variables(out); }
    }
    else if (const auto *cmp = std::get_if<ComparisonAtom>(&a)) {
        cmp->lhs.collect_variables(out);
        cmp->rhs.collect_variables(out);
    }
    else if (const auto *agg = std::get_if<AggregateAtom>(&a)) {
        agg->guard.collect_variables(out);
        for (const auto &elem : agg->elements) {
            for (const auto &t : elem.tuple) { t.collect_variables(out); }
            for (const auto &cond : elem.condition) { collect_variables(cond, out); }
        }
    }
}

void collect_variables(const Literal &l, std::vector<SymbolId> &out) {
    collect_variables(l.atom, out);
}

} // namespace mg
