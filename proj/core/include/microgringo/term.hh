#ifndef MICROGRINGO_TERM_HH
#define MICROGRINGO_TERM_HH

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mg {

// Interned symbol table for constant, function, variable, and predicate
// names. Construction of programs is single-threaded; lookups afterwards
// are read-only.
using SymbolId = std::uint32_t;

SymbolId intern(std::string_view name);
const std::string &symbol_name(SymbolId id);
// Fresh symbols live in a reserved namespace the lexer cannot produce
// (names starting with '#').
SymbolId fresh_symbol(std::string_view prefix);

enum class Order { Less, Equal, Greater };

// First-order terms: numerals, symbolic constants, variables, function
// terms, and the supremum sentinel that compares above every numeral.
class Term {
public:
    enum class Kind : std::uint8_t { Numeral, Constant, Variable, Function, Supremum };

    static Term numeral(std::int64_t value);
    static Term constant(std::string_view name);
    static Term constant(SymbolId sym);
    static Term variable(std::string_view name);
    static Term variable(SymbolId sym);
    static Term function(std::string_view name, std::vector<Term> args);
    static Term function(SymbolId sym, std::vector<Term> args);
    static Term supremum();

    Kind kind() const { return kind_; }
    std::int64_t value() const { return num_; }
    SymbolId sym() const { return sym_; }
    const std::string &name() const { return symbol_name(sym_); }
    const std::vector<Term> &args() const;

    bool ground() const;
    void collect_variables(std::vector<SymbolId> &out) const;

    bool operator==(const Term &other) const;
    bool operator!=(const Term &other) const { return !(*this == other); }

private:
    Kind kind_ = Kind::Supremum;
    std::int64_t num_ = 0;
    SymbolId sym_ = 0;
    std::shared_ptr<const std::vector<Term>> args_;
};

// Total order on ground terms extending the numeral order:
// Numeral < Constant < Function < Supremum, constants lexicographically,
// functions by (name, arity, args). Non-ground input is a programming error.
Order compare_ground(const Term &a, const Term &b);

std::size_t hash_term(const Term &t);

} // namespace mg

#endif
