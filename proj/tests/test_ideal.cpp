#include <doctest.h>

#include "cbcheck/ideal.hpp"

using namespace cbcheck;

namespace {

PolyRingPtr qxy() { return PolyRing::make({"x", "y"}, FieldSpec::rationals()); }

std::vector<Polynomial> parse_all(const std::vector<std::string>& ss, const PolyRingPtr& r) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, r));
    return out;
}

IdealHandle ideal(const std::vector<std::string>& ss, const PolyRingPtr& r) {
    return IdealHandle(r, parse_all(ss, r));
}

}  // namespace

TEST_CASE("two-component example: generators are already the reduced basis") {
    auto R = qxy();
    IdealHandle I = ideal({"x*y", "y^3", "x^4 + x^2"}, R);
    const auto& gb = I.groebner_basis(TermOrdering::degrevlex());
    REQUIRE(gb.gens().size() == 3);
    CHECK(gb.gens()[0] == parse_polynomial("x*y", R));
    CHECK(gb.gens()[1] == parse_polynomial("y^3", R));
    CHECK(gb.gens()[2] == parse_polynomial("x^4 + x^2", R));

    std::vector<Monomial> basis;
    REQUIRE(gb.zero_dimensional(&basis));
    std::vector<Monomial> expected = {Monomial({0, 0}), Monomial({0, 1}), Monomial({1, 0}),
                                      Monomial({0, 2}), Monomial({2, 0}), Monomial({3, 0})};
    CHECK(basis == expected);

    CHECK(gb.contains(parse_polynomial("x^5 + x^3", R)));
    CHECK(!gb.contains(parse_polynomial("x^2", R)));
    CHECK(gb.normal_form(parse_polynomial("x^4", R)) == parse_polynomial("-x^2", R));
}

TEST_CASE("eight points: both reduced bases reproduced coefficient-exact") {
    auto R = qxy();
    // vanishing ideal of (1,-1),(0,2),(1,1),(1,2),(0,1),(1,3),(2,4),(3,4)
    IdealHandle I = ideal({"x^2*y - 4*x^2 - x*y + 4*x",
                           "x^3 + x*y^2 - 6*x^2 - 3*x*y - y^2 + 7*x + 3*y - 2",
                           "y^4 - 10*x*y^2 - 5*y^3 + 15*x^2 + 30*x*y + 15*y^2 - 35*x - 25*y + 14",
                           "x*y^3 - 7*x*y^2 - y^3 + 14*x*y + 7*y^2 - 8*x - 14*y + 8"},
                          R);
    // DegRevLex: the four generators above, sorted by leading term
    const auto& drl = I.groebner_basis(TermOrdering::degrevlex());
    std::vector<Polynomial> expected = parse_all(
        {"x^2*y - 4*x^2 - x*y + 4*x",
         "x^3 + x*y^2 - 6*x^2 - 3*x*y - y^2 + 7*x + 3*y - 2",
         "y^4 - 10*x*y^2 - 5*y^3 + 15*x^2 + 30*x*y + 15*y^2 - 35*x - 25*y + 14",
         "x*y^3 - 7*x*y^2 - y^3 + 14*x*y + 7*y^2 - 8*x - 14*y + 8"},
        R);
    REQUIRE(drl.gens().size() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(drl.gens()[i] == expected[i]);

    const auto& lex = I.groebner_basis(TermOrdering::lex());
    std::vector<Polynomial> lex_expected = parse_all(
        {"y^5 - 9*y^4 + 25*y^3 - 15*y^2 - 26*y + 24",
         "x*y^3 - 7*x*y^2 + 14*x*y - 8*x - y^3 + 7*y^2 - 14*y + 8",
         "x^2 - 2/3*x*y^2 + 2*x*y - 7/3*x + 1/15*y^4 - 1/3*y^3 + y^2 - 5/3*y + 14/15"},
        R);
    REQUIRE(lex.gens().size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        bool found = false;
        for (const auto& g : lex.gens()) found = found || g == lex_expected[i];
        CHECK(found);
    }
}

TEST_CASE("intersection of two maximal ideals matches the printed basis") {
    auto R = qxy();
    IdealHandle M1 = ideal({"x^5 - x - 2", "y - x^3"}, R);
    IdealHandle M2 = ideal({"x", "y"}, R);
    IdealHandle I = ideal_intersection(M1, M2);
    IdealHandle expected = ideal({"x^2 - y^2 + 2*x", "x*y^2 - 2*y^2 + 4*x - y",
                                  "y^4 - x*y - 4*y^2 + 8*x - 4*y"},
                                 R);
    CHECK(ideal_equal(I, expected));
    const auto& gb = I.groebner_basis(TermOrdering::degrevlex());
    REQUIRE(gb.gens().size() == 3);
    CHECK(gb.gens()[0] == parse_polynomial("x^2 - y^2 + 2*x", R));
    CHECK(gb.gens()[1] == parse_polynomial("x*y^2 - 2*y^2 + 4*x - y", R));
    CHECK(gb.gens()[2] == parse_polynomial("y^4 - x*y - 4*y^2 + 8*x - 4*y", R));
}

TEST_CASE("colon and intersection reproduce the separator ideal") {
    auto R = qxy();
    IdealHandle Q1 = ideal({"y", "x^2 + 1"}, R);
    IdealHandle Q2 = ideal({"x*y", "x^2", "y^3"}, R);
    IdealHandle M2 = ideal({"x", "y"}, R);
    IdealHandle J = ideal_intersection(ideal_colon(Q2, M2), Q1);
    CHECK(ideal_equal(J, ideal({"y^2", "x*y", "x^3 + x"}, R)));
}

TEST_CASE("ideal operation laws") {
    auto R = qxy();
    IdealHandle A = ideal({"x^2 - y", "y^2"}, R);
    IdealHandle B = ideal({"x*y - 1"}, R);
    IdealHandle S = ideal_sum(A, B);
    for (const auto& g : A.gens()) CHECK(S.contains(g));
    for (const auto& g : B.gens()) CHECK(S.contains(g));

    IdealHandle P = ideal_product(A, B);
    IdealHandle C = ideal_intersection(A, B);
    for (const auto& g : P.gens()) CHECK(C.contains(g));  // product inside intersection
    for (const auto& g : C.gens()) {
        CHECK(A.contains(g));
        CHECK(B.contains(g));
    }

    // I : <1> = I and I subseteq I : J
    IdealHandle one = ideal({"1"}, R);
    CHECK(ideal_equal(ideal_colon(A, one), A));
    IdealHandle col = ideal_colon(A, B);
    for (const auto& g : A.gens()) CHECK(col.contains(g));
    CHECK_THROWS_AS(ideal_colon(A, ideal({"0"}, R)), IdealError);
}

TEST_CASE("degree form ideal of the seven-point scheme") {
    auto R = qxy();
    IdealHandle I = ideal({"x*y^2 - y^3 - x^2 + y^2", "x^2*y - y^2", "x^3 - y^3 + y^2",
                           "y^4 - 2*y^3 - x^2 + y^2"},
                          R);
    IdealHandle DF = degree_form_ideal(I);
    CHECK(ideal_equal(DF, ideal({"x*y^2 - y^3", "x^2*y", "x^3 - y^3", "y^4"}, R)));
}

TEST_CASE("trivial and non-zero-dimensional ideals") {
    auto R = qxy();
    CHECK(ideal({"x", "y", "1"}, R).groebner_basis(TermOrdering::degrevlex()).is_trivial());
    CHECK(ideal({"x - 1", "x - 2"}, R).groebner_basis(TermOrdering::degrevlex()).is_trivial());
    CHECK(!ideal({"x"}, R).groebner_basis(TermOrdering::degrevlex()).zero_dimensional());
    CHECK(ideal({"0"}, R).is_zero_ideal());
    CHECK(!ideal({"x"}, R).is_zero_ideal());
}

TEST_CASE("division results satisfy the defining identity") {
    auto R = qxy();
    auto ord = TermOrdering::degrevlex();
    Polynomial f = parse_polynomial("x^3*y + x*y^2 - 2*x + 1", R);
    Polynomial g = parse_polynomial("x*y - 1", R);
    DivisionResult d = divide(f, g, ord);
    CHECK(f == d.quotient * g + d.remainder);
    for (const auto& t : d.remainder.terms())
        CHECK(!g.leading_term(ord).mono.divides(t.mono));
    CHECK(divide_exact(f * g, g) == f);
    CHECK_THROWS_AS(divide_exact(parse_polynomial("x + 1", R), g), IdealError);
}
