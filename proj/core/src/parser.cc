#include "microgringo/parser.hh"

#include "microgringo/printer.hh"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace mg {

ParseError::ParseError(std::string file, int line, int column, const std::string &message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      file_(std::move(file)), line_(line), column_(column) {}

namespace {

enum class Tok {
    Ident,      // lowercase identifier (also the keyword "not")
    Variable,   // uppercase identifier
    Number,
    Anonymous,  // _
    Directive,  // #sum, #sum+, #count, ...
    Dot, Comma, Semicolon, Colon, If, LParen, RParen, LBrace, RBrace,
    Neq, Lt, Gt, Leq, Geq,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t number = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    Lexer(std::string_view source, std::string_view filename)
        : src_(source), file_(filename) {}

    Token next() {
        skip_ws();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= src_.size()) {
            tok.kind = Tok::End;
            return tok;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            return lex_number(tok);
        }
        if (c == '_' && !is_ident_char(peek(1))) {
            advance();
            tok.kind = Tok::Anonymous;
            return tok;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') { return lex_ident(tok); }
        if (c == '#') { return lex_directive(tok); }
        return lex_punct(tok);
    }

    [[noreturn]] void error(const Token &at, const std::string &message) const {
        throw ParseError(std::string(file_), at.line, at.column, message);
    }

private:
    char peek(std::size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        }
        else {
            ++column_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') { advance(); }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Token lex_number(Token tok) {
        std::string text;
        if (peek() == '-') {
            text += '-';
            advance();
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            text += peek();
            advance();
        }
        tok.kind = Tok::Number;
        try {
            tok.number = std::stoll(text);
        }
        catch (const std::out_of_range &) {
            error(tok, "numeral out of 64-bit range: " + text);
        }
        tok.text = std::move(text);
        return tok;
    }

    Token lex_ident(Token tok) {
        std::string text;
        while (is_ident_char(peek())) {
            text += peek();
            advance();
        }
        tok.kind = std::isupper(static_cast<unsigned char>(text.front())) || text.front() == '_'
                       ? Tok::Variable
                       : Tok::Ident;
        tok.text = std::move(text);
        return tok;
    }

    Token lex_directive(Token tok) {
        advance(); // '#'
        std::string text = "#";
        while (is_ident_char(peek())) {
            text += peek();
            advance();
        }
        if (text == "#sum" && peek() == '+') {
            advance();
            text = "#sum+";
        }
        if (text == "#sumplus") { text = "#sum+"; }
        static const std::unordered_set<std::string> known = {"#sum", "#sum+", "#count", "#min",
                                                             "#max"};
        if (known.find(text) == known.end()) { error(tok, "unknown directive: " + text); }
        tok.kind = Tok::Directive;
        tok.text = std::move(text);
        return tok;
    }

    Token lex_punct(Token tok) {
        char c = peek();
        advance();
        switch (c) {
            case '.': tok.kind = Tok::Dot; return tok;
            case ',': tok.kind = Tok::Comma; return tok;
            case ';': tok.kind = Tok::Semicolon; return tok;
            case '(': tok.kind = Tok::LParen; return tok;
            case ')': tok.kind = Tok::RParen; return tok;
            case '{': tok.kind = Tok::LBrace; return tok;
            case '}': tok.kind = Tok::RBrace; return tok;
            case ':':
                if (peek() == '-') {
                    advance();
                    tok.kind = Tok::If;
                }
                else {
                    tok.kind = Tok::Colon;
                }
                return tok;
            case '!':
                if (peek() == '=') {
                    advance();
                    tok.kind = Tok::Neq;
                    return tok;
                }
                break;
            case '<':
                if (peek() == '=') {
                    advance();
                    tok.kind = Tok::Leq;
                }
                else {
                    tok.kind = Tok::Lt;
                }
                return tok;
            case '>':
                if (peek() == '=') {
                    advance();
                    tok.kind = Tok::Geq;
                }
                else {
                    tok.kind = Tok::Gt;
                }
                return tok;
            default: break;
        }
        error(tok, std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    std::string_view file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view source, std::string_view filename)
        : lexer_(source, filename) {
        tok_ = lexer_.next();
    }

    Program parse() {
        Program prog;
        std::unordered_set<SymbolicAtom, SymbolicAtomHash> fact_seen;
        while (tok_.kind != Tok::End) {
            Token at = tok_;
            Rule r = parse_rule();
            auto unsafe = check_safety(r);
            if (!unsafe.empty()) {
                std::ostringstream msg;
                msg << "unsafe variable";
                if (unsafe.size() > 1) { msg << "s"; }
                for (std::size_t i = 0; i < unsafe.size(); ++i) {
                    msg << (i == 0 ? " " : ", ") << unsafe[i];
                }
                lexer_.error(at, msg.str());
            }
            if (r.body.empty() && !r.is_constraint() && r.head.ground()) {
                if (fact_seen.insert(r.head).second) { prog.facts.push_back(std::move(r.head)); }
            }
            else {
                r.origin = static_cast<int>(prog.rules.size());
                prog.rules.push_back(std::move(r));
            }
        }
        return prog;
    }

private:
    void consume() { tok_ = lexer_.next(); }

    void expect(Tok kind, const char *what) {
        if (tok_.kind != kind) { lexer_.error(tok_, std::string("expected ") + what); }
        consume();
    }

    Rule parse_rule() {
        Rule r;
        if (tok_.kind == Tok::If) {
            r.head = false_atom();
            consume();
            if (tok_.kind != Tok::Dot) { parse_body(r.body); }
        }
        else {
            r.head = parse_symbolic_atom();
            if (tok_.kind == Tok::If) {
                consume();
                if (tok_.kind != Tok::Dot) { parse_body(r.body); }
            }
        }
        expect(Tok::Dot, "'.'");
        return r;
    }

    void parse_body(std::vector<Literal> &body) {
        body.push_back(parse_literal(true));
        while (tok_.kind == Tok::Comma) {
            consume();
            body.push_back(parse_literal(true));
        }
    }

    Literal parse_literal(bool allow_aggregate) {
        Literal lit;
        if (tok_.kind == Tok::Ident && tok_.text == "not") {
            lit.negated = true;
            consume();
        }
        if (tok_.kind == Tok::Directive) {
            if (!allow_aggregate) { lexer_.error(tok_, "nested aggregates are not allowed"); }
            lit.atom = parse_aggregate();
            return lit;
        }
        Token at = tok_;
        Term lhs = parse_term();
        if (auto rel = relation_token()) {
            consume();
            Term rhs = parse_term();
            lit.atom = ComparisonAtom{std::move(lhs), *rel, std::move(rhs)};
            return lit;
        }
        lit.atom = term_to_atom(lhs, at);
        return lit;
    }

    std::optional<Relation> relation_token() const {
        switch (tok_.kind) {
            case Tok::Neq: return Relation::Neq;
            case Tok::Lt: return Relation::Lt;
            case Tok::Gt: return Relation::Gt;
            case Tok::Leq: return Relation::Leq;
            case Tok::Geq: return Relation::Geq;
            default: return std::nullopt;
        }
    }

    SymbolicAtom term_to_atom(const Term &t, const Token &at) {
        SymbolicAtom atom;
        switch (t.kind()) {
            case Term::Kind::Constant:
                atom.pred = t.sym();
                return atom;
            case Term::Kind::Function:
                atom.pred = t.sym();
                atom.args = t.args();
                return atom;
            default: lexer_.error(at, "expected a symbolic atom");
        }
    }

    SymbolicAtom parse_symbolic_atom() {
        Token at = tok_;
        if (tok_.kind != Tok::Ident) { lexer_.error(at, "expected a symbolic atom"); }
        return term_to_atom(parse_term(), at);
    }

    AggregateAtom parse_aggregate() {
        AggregateAtom agg;
        if (tok_.text == "#sum") { agg.name = AggrName::Sum; }
        else if (tok_.text == "#sum+") { agg.name = AggrName::SumPlus; }
        else if (tok_.text == "#count") { agg.name = AggrName::Count; }
        else if (tok_.text == "#min") { agg.name = AggrName::Min; }
        else { agg.name = AggrName::Max; }
        consume();
        expect(Tok::LBrace, "'{'");
        if (tok_.kind != Tok::RBrace) {
            agg.elements.push_back(parse_element());
            while (tok_.kind == Tok::Semicolon) {
                consume();
                agg.elements.push_back(parse_element());
            }
        }
        expect(Tok::RBrace, "'}'");
        auto rel = relation_token();
        if (!rel) { lexer_.error(tok_, "expected a comparison after the aggregate"); }
        agg.rel = *rel;
        consume();
        agg.guard = parse_term();
        return agg;
    }

    AggregateElement parse_element() {
        AggregateElement elem;
        if (tok_.kind != Tok::Colon) {
            elem.tuple.push_back(parse_term());
            while (tok_.kind == Tok::Comma) {
                consume();
                elem.tuple.push_back(parse_term());
            }
        }
        if (tok_.kind == Tok::Colon) {
            consume();
            elem.condition.push_back(parse_literal(false));
            while (tok_.kind == Tok::Comma) {
                consume();
                elem.condition.push_back(parse_literal(false));
            }
        }
        return elem;
    }

    Term parse_term() {
        Token at = tok_;
        switch (tok_.kind) {
            case Tok::Number: {
                std::int64_t n = tok_.number;
                consume();
                return Term::numeral(n);
            }
            case Tok::Variable: {
                std::string name = tok_.text;
                consume();
                return Term::variable(name);
            }
            case Tok::Anonymous: {
                consume();
                return Term::variable(fresh_symbol("Anon"));
            }
            case Tok::Ident: {
                std::string name = tok_.text;
                consume();
                if (tok_.kind == Tok::LParen) {
                    consume();
                    std::vector<Term> args;
                    args.push_back(parse_term());
                    while (tok_.kind == Tok::Comma) {
                        consume();
                        args.push_back(parse_term());
                    }
                    expect(Tok::RParen, "')'");
                    return Term::function(name, std::move(args));
                }
                return Term::constant(name);
            }
            default: lexer_.error(at, "expected a term");
        }
    }

    Lexer lexer_;
    Token tok_;
};

void insert_vars(const Term &t, std::unordered_set<SymbolId> &out) {
    std::vector<SymbolId> vars;
    t.collect_variables(vars);
    out.insert(vars.begin(), vars.end());
}

} // namespace

std::vector<std::string> check_safety(const Rule &r) {
    std::unordered_set<SymbolId> global;
    for (const auto &t : r.head.args) { insert_vars(t, global); }
    for (const auto &lit : r.body) {
        if (const auto *sym = lit.symbolic()) {
            for (const auto &t : sym->args) { insert_vars(t, global); }
        }
        else if (const auto *cmp = lit.comparison()) {
            insert_vars(cmp->lhs, global);
            insert_vars(cmp->rhs, global);
        }
        else if (const auto *agg = lit.aggregate()) {
            insert_vars(agg->guard, global);
        }
    }

    // global variables must be bound by a positive symbolic body literal
    std::unordered_set<SymbolId> bound;
    for (const auto &lit : r.body) {
        if (!lit.negated) {
            if (const auto *sym = lit.symbolic()) {
                for (const auto &t : sym->args) { insert_vars(t, bound); }
            }
        }
    }

    std::vector<SymbolId> unsafe;
    for (SymbolId v : global) {
        if (bound.find(v) == bound.end()) { unsafe.push_back(v); }
    }

    // aggregate-local variables must be bound within their element's condition
    for (const auto &lit : r.body) {
        const auto *agg = lit.aggregate();
        if (agg == nullptr) { continue; }
        for (const auto &elem : agg->elements) {
            std::unordered_set<SymbolId> local;
            for (const auto &t : elem.tuple) { insert_vars(t, local); }
            for (const auto &cond : elem.condition) {
                std::vector<SymbolId> vars;
                collect_variables(cond, vars);
                local.insert(vars.begin(), vars.end());
            }
            std::unordered_set<SymbolId> local_bound;
            for (const auto &cond : elem.condition) {
                if (!cond.negated) {
                    if (const auto *sym = cond.symbolic()) {
                        for (const auto &t : sym->args) { insert_vars(t, local_bound); }
                    }
                }
            }
            for (SymbolId v : local) {
                if (global.find(v) != global.end()) { continue; }
                if (local_bound.find(v) == local_bound.end()) { unsafe.push_back(v); }
            }
        }
    }

    std::vector<std::string> names;
    for (SymbolId v : unsafe) { names.push_back(symbol_name(v)); }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

Program parse_program(std::string_view source, std::string_view filename) {
    Parser parser(source, filename);
    return parser.parse();
}

} // namespace mg
