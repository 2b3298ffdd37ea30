#ifndef MICROGRINGO_PARSER_HH
#define MICROGRINGO_PARSER_HH

#include "microgringo/ast.hh"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mg {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, int column, const std::string &message);
    const std::string &file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string file_;
    int line_;
    int column_;
};

// Parses the textual input language. Ground rules with empty bodies become
// facts; every rule is safety-checked and unsafe programs are rejected.
Program parse_program(std::string_view source, std::string_view filename = "<string>");

// Returns the names of unsafe variables, empty when the rule is safe.
std::vector<std::string> check_safety(const Rule &r);

} // namespace mg

#endif
