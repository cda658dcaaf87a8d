#include <doctest.h>

#include "cbcheck/problem.hpp"

using namespace cbcheck;

TEST_CASE("problem text with all sections") {
    Problem p = parse_problem_text(
        "# two fat points\n"
        "field: Q\n"
        "vars: x, y\n"
        "order: DegRevLex\n"
        "ideal:\n"
        "  x*y\n"
        "  y^3\n"
        "  x^4 + x^2\n"
        "component:\n"
        "  Q: y, x^2 + 1\n"
        "  M: y, x^2 + 1\n"
        "component:\n"
        "  Q: x*y, x^2, y^3\n"
        "  M: x, y\n");
    CHECK(p.field->kind() == FieldKind::Rationals);
    CHECK(p.ring->vars() == std::vector<std::string>{"x", "y"});
    REQUIRE(p.ideal);
    CHECK(p.ideal->gens().size() == 3);
    CHECK(p.ideal->gens()[0] == parse_polynomial("x*y", p.ring));
    REQUIRE(p.components.size() == 2);
    CHECK(p.components[0].primary.gens().size() == 2);
    CHECK(p.components[1].maximal.gens()[0] == parse_polynomial("x", p.ring));
}

TEST_CASE("inline ideal list and field variants") {
    Problem p = parse_problem_text("field: GF(7)\nvars: x\nideal: x^2 - 3, x^7 - x\n");
    CHECK(p.field->kind() == FieldKind::PrimeField);
    CHECK(p.field->characteristic() == 7);
    CHECK(p.ideal->gens().size() == 2);

    Problem q = parse_problem_text("field: QQ\nvars: x\nideal: x\n");
    CHECK(q.field->kind() == FieldKind::Rationals);

    Problem e = parse_problem_text("field: GF(2^2)\nvars: x\nideal: x^2 + a*x\n");
    CHECK(e.field->kind() == FieldKind::ExtensionField);
    CHECK(e.field->characteristic() == 2);
    CHECK(e.field->degree() == 2);

    // GF(p^1) collapses to the prime field
    Problem f = parse_problem_text("field: GF(5^1)\nvars: x\nideal: x\n");
    CHECK(f.field->kind() == FieldKind::PrimeField);
}

TEST_CASE("parse errors carry line numbers") {
    auto msg_of = [](const std::string& text) {
        try {
            parse_problem_text(text);
        } catch (const ProblemError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK_THROWS_AS(parse_problem_text("field: GF(6)\nvars: x\nideal: x\n"), FieldError);
    CHECK(msg_of("field: F17\nvars: x\nideal: x\n").find("line 1") == 0);
    CHECK(msg_of("field: Q\nvars: x\nideal:\n  x +\n").find("line 4") == 0);
    CHECK(msg_of("field: Q\nvars: x\nnonsense\nideal: x\n").find("line 3") == 0);
    CHECK_THROWS_AS(parse_problem_text("vars: x\nideal: x\n"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text("field: Q\nideal: x\n"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text("field: Q\nvars: x\n"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text("field: Q\nvars: x\norder: Lex\nideal: x\n"),
                    ProblemError);
    CHECK_THROWS_AS(
        parse_problem_text("field: Q\nvars: x\nideal: x\ncomponent:\n  Q: x\n"),
        ProblemError);  // component without M:
    CHECK_THROWS_AS(parse_problem_file("/nonexistent/file.ideal"), ProblemError);
}

TEST_CASE("comments and blank lines are ignored") {
    Problem p = parse_problem_text(
        "\n# header\nfield: Q  # the rationals\n\nvars: x, y\nideal: x*y  # product\n  y^2\n");
    CHECK(p.ideal->gens().size() == 2);
    CHECK(p.ideal->gens()[1] == parse_polynomial("y^2", p.ring));
}
