#ifndef MICROGRINGO_PRINTER_HH
#define MICROGRINGO_PRINTER_HH

#include "microgringo/ast.hh"

#include <string>

namespace mg {

// Canonical textual form matching the input language, used for the ground
// program output, traces, and golden tests. Reserved names lose their '#'
// prefix; anonymous variables print as '_'.
std::string to_string(const Term &t);
std::string to_string(const SymbolicAtom &a);
std::string to_string(Relation rel);
std::string to_string(const Literal &l);
std::string to_string(const Rule &r);
std::string to_string(const Program &p);

std::string aggr_name_string(AggrName name);

} // namespace mg

#endif
