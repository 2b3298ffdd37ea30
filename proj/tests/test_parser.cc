#include <doctest.h>

#include "programs.hh"

#include <microgringo/parser.hh>
#include <microgringo/printer.hh>

using namespace mg;
using namespace mg::test;

TEST_CASE("facts are split off the rule list") {
    Program p = parse("owns(c1,c2,60).");
    CHECK(p.rules.empty());
    REQUIRE(p.facts.size() == 1);
    CHECK(to_string(p.facts[0]) == "owns(c1,c2,60)");
}

TEST_CASE("empty source parses to the empty program") {
    Program p = parse("");
    CHECK(p.rules.empty());
    CHECK(p.facts.empty());
}

TEST_CASE("company controls rule parses to one aggregate of two elements") {
    Program p = parse(
        "controls(X,Y) :- #sum+ { S : owns(X,Y,S) ; S,Z : controls(X,Z), owns(Z,Y,S) } > 50, "
        "company(X), company(Y), X != Y.");
    REQUIRE(p.rules.size() == 1);
    const Rule &r = p.rules[0];
    REQUIRE(r.body.size() == 4);
    const auto *aggr = r.body[0].aggregate();
    REQUIRE(aggr != nullptr);
    CHECK(aggr->name == AggrName::SumPlus);
    CHECK(aggr->rel == Relation::Gt);
    CHECK(to_string(aggr->guard) == "50");
    REQUIRE(aggr->elements.size() == 2);
    CHECK(aggr->elements[0].tuple.size() == 1);
    CHECK(aggr->elements[0].condition.size() == 1);
    CHECK(aggr->elements[1].tuple.size() == 2);
    CHECK(aggr->elements[1].condition.size() == 2);
    CHECK(r.body[3].comparison() != nullptr);
}

TEST_CASE("check_safety examples") {
    Program p = parse("h(X) :- p(X), not q(X).");
    REQUIRE(p.rules.size() == 1);
    CHECK(check_safety(p.rules[0]).empty());

    // an unsafe rule never reaches the caller; build it by hand
    Rule unsafe;
    unsafe.head = SymbolicAtom{intern("h"), {Term::variable("X")}};
    unsafe.body.push_back(
        Literal{SymbolicAtom{intern("q"), {Term::variable("X")}}, true, false, Adorn::None});
    auto offenders = check_safety(unsafe);
    REQUIRE(offenders.size() == 1);
    CHECK(offenders[0] == "X");

    Program company = parse(company_program);
    for (const auto &r : company.rules) { CHECK(check_safety(r).empty()); }
}

TEST_CASE("unsafe programs are rejected with the offending variable") {
    CHECK_THROWS_WITH_AS(parse("h(X) :- not q(X)."), doctest::Contains("X"), ParseError);
    CHECK_THROWS_AS(parse("h(X) :- p(Y)."), ParseError);
    // local aggregate variables must be bound inside their element
    CHECK_THROWS_AS(parse("h :- #sum { S : p } > 0, q."), ParseError);
    // guard variables are global and need a positive binder
    CHECK_THROWS_AS(parse("h :- #sum { 1 : p } > G."), ParseError);
}

TEST_CASE("syntax errors carry position information") {
    try {
        parse("p(a).\nq(b");
        FAIL("expected ParseError");
    }
    catch (const ParseError &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 1);
        CHECK(e.file() == "<test>");
    }
    CHECK_THROWS_AS(parse("p(."), ParseError);
    CHECK_THROWS_AS(parse("p(a)"), ParseError); // missing terminator
}

TEST_CASE("comments and whitespace are ignored") {
    Program p = parse("% a comment\np(a). % trailing\n\n  q(b).\n");
    CHECK(p.facts.size() == 2);
}

TEST_CASE("anonymous variables are freshened apart") {
    Program p = parse("h(X) :- p(X,_), q(_).");
    REQUIRE(p.rules.size() == 1);
    std::vector<SymbolId> vars;
    for (const auto &l : p.rules[0].body) { collect_variables(l, vars); }
    // X occurs twice; the two anonymous variables must be distinct
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    CHECK(vars.size() == 3);
}

TEST_CASE("integrity constraints use the reserved head") {
    Program p = parse(":- p(X), q(X). p(a). q(a).");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].is_constraint());
    CHECK(p.rules[0].head.pred == false_pred());
    CHECK(to_string(p.rules[0]) == ":- p(X), q(X).");
}

TEST_CASE("print-parse round trip is a fixed point") {
    for (const char *source : {company_program, hamiltonian_program,
                               "h :- #count { X : p(X) ; a,b : q } <= 3, r.\n"
                               "r. p(a). q.\n",
                               "p(f(g(X)),Y) :- q(X,Y), X < Y, not r(Y).\nq(1,2).\n"}) {
        Program once = parse(source);
        std::string text = to_string(once);
        Program twice = parse(text);
        CHECK(to_string(twice) == text);
    }
}

TEST_CASE("duplicate facts collapse") {
    Program p = parse("p(a). p(a). p(b).");
    CHECK(p.facts.size() == 2);
}
