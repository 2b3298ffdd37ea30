#include "microgringo/printer.hh"

#include <sstream>

namespace mg {

namespace {

std::string print_name(SymbolId sym) {
    const std::string &name = symbol_name(sym);
    if (!name.empty() && name.front() == '#') {
        if (name.rfind("#Anon", 0) == 0 || name.rfind("#V", 0) == 0) { return "_"; }
        return name.substr(1);
    }
    return name;
}

const char *adorn_suffix(Adorn a) {
    switch (a) {
        case Adorn::New: return "_n";
        case Adorn::Old: return "_o";
        case Adorn::All: return "_a";
        case Adorn::None: break;
    }
    return "";
}

void print_terms(std::ostringstream &out, const std::vector<Term> &terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) { out << ","; }
        out << to_string(terms[i]);
    }
}

} // namespace

std::string to_string(const Term &t) {
    switch (t.kind()) {
        case Term::Kind::Numeral: return std::to_string(t.value());
        case Term::Kind::Constant: return print_name(t.sym());
        case Term::Kind::Variable: return print_name(t.sym());
        case Term::Kind::Supremum: return "#sup";
        case Term::Kind::Function: {
            std::ostringstream out;
            out << print_name(t.sym()) << "(";
            print_terms(out, t.args());
            out << ")";
            return out.str();
        }
    }
    return {};
}

std::string to_string(const SymbolicAtom &a) {
    std::ostringstream out;
    out << print_name(a.pred);
    if (!a.args.empty()) {
        out << "(";
        print_terms(out, a.args);
        out << ")";
    }
    return out.str();
}

std::string to_string(Relation rel) {
    switch (rel) {
        case Relation::Neq: return "!=";
        case Relation::Lt: return "<";
        case Relation::Gt: return ">";
        case Relation::Leq: return "<=";
        case Relation::Geq: return ">=";
    }
    return {};
}

std::string aggr_name_string(AggrName name) {
    switch (name) {
        case AggrName::Sum: return "#sum";
        case AggrName::SumPlus: return "#sum+";
        case AggrName::Count: return "#count";
        case AggrName::Min: return "#min";
        case AggrName::Max: return "#max";
    }
    return {};
}

std::string to_string(const Literal &l) {
    std::ostringstream out;
    if (l.negated) { out << "not "; }
    if (const auto *sym = l.symbolic()) {
        out << print_name(sym->pred) << adorn_suffix(l.adorn);
        if (l.marked) { out << "'"; }
        if (!sym->args.empty()) {
            out << "(";
            print_terms(out, sym->args);
            out << ")";
        }
    }
    else if (const auto *cmp = l.comparison()) {
        out << to_string(cmp->lhs) << " " << to_string(cmp->rel) << " " << to_string(cmp->rhs);
    }
    else if (const auto *agg = l.aggregate()) {
        out << aggr_name_string(agg->name) << " { ";
        for (std::size_t i = 0; i < agg->elements.size(); ++i) {
            if (i > 0) { out << " ; "; }
            const auto &elem = agg->elements[i];
            print_terms(out, elem.tuple);
            if (!elem.condition.empty()) {
                out << " : ";
                for (std::size_t j = 0; j < elem.condition.size(); ++j) {
                    if (j > 0) { out << ", "; }
                    out << to_string(elem.condition[j]);
                }
            }
        }
        out << " } " << to_string(agg->rel) << " " << to_string(agg->guard);
    }
    return out.str();
}

std::string to_string(const Rule &r) {
    std::ostringstream out;
    if (!r.is_constraint()) { out << to_string(r.head); }
    if (!r.body.empty() || r.is_constraint()) {
        out << " :- ";
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (i > 0) { out << ", "; }
            out << to_string(r.body[i]);
        }
    }
    out << ".";
    std::string s = out.str();
    if (s.rfind(" :- ", 0) == 0) { s = s.substr(1); } // constraints start at ":-"
    return s;
}

std::string to_string(const Program &p) {
    std::ostringstream out;
    for (const auto &f : p.facts) { out << to_string(f) << ".\n"; }
    for (const auto &r : p.rules) { out << to_string(r) << "\n"; }
    return out.str();
}

} // namespace mg
