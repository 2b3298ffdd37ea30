#include "microgringo/term.hh"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace mg {

namespace {

struct SymbolTable {
    std::unordered_map<std::string, SymbolId> ids;
    std::vector<std::string> names;
    std::uint64_t fresh_counter = 0;
};

SymbolTable &table() {
    static SymbolTable tab;
    return tab;
}

} // namespace

SymbolId intern(std::string_view name) {
    auto &tab = table();
    auto it = tab.ids.find(std::string(name));
    if (it != tab.ids.end()) { return it->second; }
    SymbolId id = static_cast<SymbolId>(tab.names.size());
    tab.names.emplace_back(name);
    tab.ids.emplace(tab.names.back(), id);
    return id;
}

const std::string &symbol_name(SymbolId id) {
    return table().names.at(id);
}

SymbolId fresh_symbol(std::string_view prefix) {
    auto &tab = table();
    std::string name = "#";
    name += prefix;
    name += std::to_string(tab.fresh_counter++);
    return intern(name);
}

Term Term::numeral(std::int64_t value) {
    Term t;
    t.kind_ = Kind::Numeral;
    t.num_ = value;
    return t;
}

Term Term::constant(std::string_view name) { return constant(intern(name)); }

Term Term::constant(SymbolId sym) {
    Term t;
    t.kind_ = Kind::Constant;
    t.sym_ = sym;
    return t;
}

Term Term::variable(std::string_view name) { return variable(intern(name)); }

Term Term::variable(SymbolId sym) {
    Term t;
    t.kind_ = Kind::Variable;
    t.sym_ = sym;
    return t;
}

Term Term::function(std::string_view name, std::vector<Term> args) {
    return function(intern(name), std::move(args));
}

Term Term::function(SymbolId sym, std::vector<Term> args) {
    Term t;
    t.kind_ = Kind::Function;
    t.sym_ = sym;
    t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
    return t;
}

Term Term::supremum() {
    Term t;
    t.kind_ = Kind::Supremum;
    return t;
}

const std::vector<Term> &Term::args() const {
    static const std::vector<Term> empty;
    return args_ ? *args_ : empty;
}

bool Term::ground() const {
    switch (kind_) {
        case Kind::Variable: return false;
        case Kind::Function:
            for (const auto &a : args()) {
                if (!a.ground()) { return false; }
            }
            return true;
        default: return true;
    }
}

void Term::collect_variables(std::vector<SymbolId> &out) const {
    switch (kind_) {
        case Kind::Variable: out.push_back(sym_); break;
        case Kind::Function:
            for (const auto &a : args()) { a.collect_variables(out); }
            break;
        default: break;
    }
}

bool Term::operator==(const Term &other) const {
    if (kind_ != other.kind_) { return false; }
    switch (kind_) {
        case Kind::Numeral: return num_ == other.num_;
        case Kind::Constant:
        case Kind::Variable: return sym_ == other.sym_;
        case Kind::Function: {
            if (sym_ != other.sym_) { return false; }
            return args() == other.args();
        }
        case Kind::Supremum: return true;
    }
    return false;
}

namespace {

int kind_rank(Term::Kind k) {
    switch (k) {
        case Term::Kind::Numeral: return 0;
        case Term::Kind::Constant: return 1;
        case Term::Kind::Function: return 2;
        case Term::Kind::Supremum: return 3;
        case Term::Kind::Variable: break;
    }
    throw std::logic_error("compare_ground: non-ground term");
}

template <typename T>
Order cmp(const T &a, const T &b) {
    if (a < b) { return Order::Less; }
    if (b < a) { return Order::Greater; }
    return Order::Equal;
}

} // namespace

Order compare_ground(const Term &a, const Term &b) {
    int ra = kind_rank(a.kind());
    int rb = kind_rank(b.kind());
    if (ra != rb) { return cmp(ra, rb); }
    switch (a.kind()) {
        case Term::Kind::Numeral: return cmp(a.value(), b.value());
        case Term::Kind::Constant: return cmp(a.name(), b.name());
        case Term::Kind::Function: {
            if (auto o = cmp(a.name(), b.name()); o != Order::Equal) { return o; }
            if (auto o = cmp(a.args().size(), b.args().size()); o != Order::Equal) { return o; }
            for (std::size_t i = 0; i < a.args().size(); ++i) {
                if (auto o = compare_ground(a.args()[i], b.args()[i]); o != Order::Equal) { return o; }
            }
            return Order::Equal;
        }
        case Term::Kind::Supremum: return Order::Equal;
        case Term::Kind::Variable: break;
    }
    throw std::logic_error("compare_ground: non-ground term");
}

std::size_t hash_term(const Term &t) {
    auto mix = [](std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
    };
    std::size_t h = static_cast<std::size_t>(t.kind());
    switch (t.kind()) {
        case Term::Kind::Numeral: h = mix(h, static_cast<std::size_t>(t.value())); break;
        case Term::Kind::Supremum: break;
        case Term::Kind::Function:
            h = mix(h, t.sym());
            for (const auto &a : t.args()) { h = mix(h, hash_term(a)); }
            break;
        default: h = mix(h, t.sym()); break;
    }
    return h;
}

} // namespace mg
