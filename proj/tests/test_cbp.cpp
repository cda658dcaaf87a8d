#include <doctest.h>

#include "cbcheck/cbp.hpp"

using namespace cbcheck;

namespace {

IdealHandle ideal(const std::vector<std::string>& ss, const PolyRingPtr& r) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, r));
    return IdealHandle(r, std::move(out));
}

DenseMatrix from_ints(const std::vector<std::vector<long>>& rows, const FieldSpecPtr& spec) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), spec);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = FieldElement::from_int(spec, rows[i][j]);
    return m;
}

QuotientAlgebra three_points_f2() {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::prime_field(2));
    return QuotientAlgebra::build(ideal({"x^2 + x", "y^2 + y", "x*y"}, R));
}

Polynomial zpoly(const std::string& s, const std::vector<std::string>& vars,
                 const FieldSpecPtr& spec) {
    return parse_polynomial(s, PolyRing::make(vars, spec));
}

}  // namespace

TEST_CASE("canonical matrices of the three-point algebra over F_2") {
    QuotientAlgebra A = three_points_f2();
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    REQUIRE(cm.delta == 2);
    auto F2 = A.ring()->field();
    CHECK(cm.V[0] == from_ints({{0, 1, 0}, {1, 1, 0}, {0, 0, 0}}, F2));
    CHECK(cm.V[1] == from_ints({{0, 0, 1}, {0, 0, 0}, {1, 0, 1}}, F2));
    CHECK(cm.W.rows() == 6);
    CHECK(cm.W.kernel().empty());
    CHECK(check_cbp(A).value);
}

TEST_CASE("canonical matrices of the six-point algebra") {
    auto R = PolyRing::make({"x", "y", "z"}, FieldSpec::rationals());
    QuotientAlgebra A = QuotientAlgebra::build(
        ideal({"z^2 - x + 2*z", "x*z - 2*x - y + 4*z", "y^2 - x + z",
               "x^2 - y*z - 4*x - 4*y + 8*z"},
              R));
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    REQUIRE(cm.delta == 2);
    auto Q = R->field();
    CHECK(cm.V[0] == from_ints({{0, 0, 0, 0, 1, 0},
                                {0, 0, 1, 0, -2, -4},
                                {0, 1, 0, 0, 0, 1},
                                {0, 0, 0, 1, -4, -8},
                                {1, -2, 0, -4, 1, 1},
                                {0, -4, 1, -8, 1, -2}},
                               Q));
    // entry (r,i) of V_1 is the yz-coefficient of b_i * b_r, hence symmetric
    CHECK(cm.V[0] == cm.V[0].transpose());
    CHECK(cm.V[1] == from_ints({{0, 0, 0, 0, 0, 1},
                                {0, 0, 0, 0, 1, 2},
                                {0, 0, 0, 1, 0, 0},
                                {0, 0, 1, 0, 2, 4},
                                {0, 1, 0, 2, 0, 1},
                                {1, 2, 0, 4, 1, 5}},
                               Q));
    CHECK(check_cbp(A).value);
}

TEST_CASE("block matrix of the two-point non-rational algebra") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    std::vector<std::string> gens = {"x^2 - y^2 + 2*x", "x*y^2 - 2*y^2 + 4*x - y",
                                     "y^4 - x*y - 4*y^2 + 8*x - 4*y"};
    QuotientAlgebra A = QuotientAlgebra::build(ideal(gens, R));
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    REQUIRE(cm.delta == 1);
    DenseMatrix expected = from_ints({{0, 0, 0, 0, 0, 1},
                                      {0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 2},
                                      {0, 1, 0, 0, 2, 4},
                                      {0, 0, 1, 2, 0, 1},
                                      {1, 0, 2, 4, 1, 6}},
                                     R->field());
    CHECK(cm.W == expected);
    CHECK(check_cbp(A).value);

    // the matrix is invariant under permuting the generator input order
    std::vector<std::string> permuted = {gens[2], gens[0], gens[1]};
    QuotientAlgebra B = QuotientAlgebra::build(ideal(permuted, R));
    CHECK(B.orders() == A.orders());
    CHECK(CanonicalMatrices::build(B).W == expected);
}

TEST_CASE("kernel test verdicts match the worked examples") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    CHECK(!check_cbp(QuotientAlgebra::build(ideal({"x*y", "y^2 - y", "x^3 - x"}, R))).value);
    CHECK(!check_cbp(QuotientAlgebra::build(ideal({"x*y", "y^3", "x^4 + x^2"}, R))).value);
    auto failing = check_cbp(QuotientAlgebra::build(ideal({"x*y", "y^2 - y", "x^3 - x"}, R)));
    REQUIRE(failing.witness);  // a nonzero annihilating element is reported
    bool nonzero = false;
    for (const auto& c : *failing.witness) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
}

TEST_CASE("locally Gorenstein via the full pencil") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    QuotientAlgebra ess = QuotientAlgebra::build(ideal({"x^2", "x*y", "y^3 - x"}, R));
    CheckOptions sym;
    sym.mode = DetMode::Symbolic;
    GorResult g = check_locally_gorenstein(ess, sym);
    CHECK(g.value);
    REQUIRE(g.det_poly);
    CHECK(*g.det_poly ==
          zpoly("z_3^4", {"z_1", "z_2", "z_3", "z_4"}, R->field()));

    QuotientAlgebra big = QuotientAlgebra::build(ideal({"x^2", "x*y", "y^2 - x"}, R));
    GorResult g2 = check_locally_gorenstein(big, sym);
    CHECK(g2.value);
    REQUIRE(g2.det_poly);
    CHECK(*g2.det_poly == zpoly("-z_3^3", {"z_1", "z_2", "z_3"}, R->field()));

    // a non-Gorenstein point: the fat origin of the two-source example
    QuotientAlgebra two = QuotientAlgebra::build(ideal({"x*y", "y^3", "x^4 + x^2"}, R));
    CHECK(!check_locally_gorenstein(two, sym).value);
    CheckOptions ev;
    ev.mode = DetMode::Evaluated;
    CHECK(!check_locally_gorenstein(two, ev).value);
}

TEST_CASE("combined Gorenstein-and-kernel pencil") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    CheckOptions sym;
    sym.mode = DetMode::Symbolic;

    QuotientAlgebra seven = QuotientAlgebra::build(
        ideal({"x*y^2 - y^3 - x^2 + y^2", "x^2*y - y^2", "x^3 - y^3 + y^2",
               "y^4 - 2*y^3 - x^2 + y^2"},
              R));
    GorResult g = check_gor_cbp(seven, sym);
    CHECK(g.value);
    REQUIRE(g.det_poly);
    // det(V_1) = -1 here, so the determinant is the negative of z_7^7
    CHECK(*g.det_poly == zpoly("-z_7^7", {"z_7"}, R->field()));

    QuotientAlgebra cubics = QuotientAlgebra::build(
        ideal({"y^3 - x", "x^3 - 3*x^2*y - x*y^2 - 2*x^2 - x*y + 5*y^2 + 3*x + 2*y"}, R));
    GorResult g2 = check_gor_cbp(cubics, sym);
    CHECK(g2.value);
    CHECK(*g2.det_poly == zpoly("z_9^9", {"z_9"}, R->field()));

    QuotientAlgebra four = QuotientAlgebra::build(ideal({"x*y", "y^2 - y", "x^3 - x"}, R));
    GorResult g3 = check_gor_cbp(four, sym);
    CHECK(!g3.value);
    CHECK(g3.det_poly->is_zero());
}

TEST_CASE("delta-one fast path") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    QuotientAlgebra two = QuotientAlgebra::build(ideal({"x*y", "y^3", "x^4 + x^2"}, R));
    CHECK(two.last_difference() == 1);
    CHECK(check_cbp_delta1(two) == check_cbp(two).value);
    CHECK(!check_cbp_delta1(two));

    QuotientAlgebra ess = QuotientAlgebra::build(ideal({"x^2", "x*y", "y^3 - x"}, R));
    CHECK(!check_cbp_delta1(ess));
    CHECK(!check_cbp(ess).value);

    QuotientAlgebra burj = QuotientAlgebra::build(
        ideal({"x^2 - y^2 + 2*x", "x*y^2 - 2*y^2 + 4*x - y", "y^4 - x*y - 4*y^2 + 8*x - 4*y"}, R));
    CHECK(check_cbp_delta1(burj));
    CHECK(check_cbp(burj).value);

    QuotientAlgebra big = QuotientAlgebra::build(ideal({"x^2", "x*y", "y^2 - x"}, R));
    CHECK_THROWS_AS(check_cbp_delta1(big), CbpError);  // delta = 2
}

TEST_CASE("annihilator test for dual-basis functionals") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    QuotientAlgebra A = QuotientAlgebra::build(ideal({"x^2", "x*y", "y^3 - x"}, R));
    // basis (1, y, x, y^2)
    auto Q = R->field();
    auto functional = [&](size_t idx) {
        Functional phi{std::vector<FieldElement>(A.dim(), FieldElement::zero(Q))};
        phi.coeffs[idx] = FieldElement::one(Q);
        return phi;
    };
    CHECK(annihilator_is_zero(functional(2), A));    // x* generates
    CHECK(!annihilator_is_zero(functional(3), A));   // (y^2)* has x in its annihilator
    Functional zero{std::vector<FieldElement>(A.dim(), FieldElement::zero(Q))};
    CHECK(!annihilator_is_zero(zero, A));
}

TEST_CASE("strict property verdicts") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    IdealHandle seven = ideal({"x*y^2 - y^3 - x^2 + y^2", "x^2*y - y^2", "x^3 - y^3 + y^2",
                               "y^4 - 2*y^3 - x^2 + y^2"},
                              R);
    CHECK(check_cbp(QuotientAlgebra::build(seven)).value);
    CHECK(!check_strict_cbp(seven).value);
    CHECK(!check_strict_gorenstein(seven));

    IdealHandle cubics =
        ideal({"y^3 - x", "x^3 - 3*x^2*y - x*y^2 - 2*x^2 - x*y + 5*y^2 + 3*x + 2*y"}, R);
    CHECK(check_strict_cbp(cubics).value);
    CHECK(check_strict_gorenstein(cubics));

    IdealHandle big = ideal({"x^2", "x*y", "y^2 - x"}, R);
    CHECK(!check_strict_gorenstein(big));

    // homogeneous ideal: the degree-form ideal is the ideal itself
    IdealHandle homog = ideal({"x^2", "x*y", "y^2"}, R);
    CHECK(check_strict_cbp(homog).value == check_cbp(QuotientAlgebra::build(homog)).value);
}

TEST_CASE("Hilbert-function inequality screen") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    QuotientAlgebra cubics = QuotientAlgebra::build(
        ideal({"y^3 - x", "x^3 - 3*x^2*y - x*y^2 - 2*x^2 - x*y + 5*y^2 + 3*x + 2*y"}, R));
    CHECK(hf_inequality_check(cubics));
    // equality at every i: 1 + 8 = 3 + 6 = 9
    const auto& hf = cubics.hilbert();
    for (int i = 0; i < cubics.regularity_index(); ++i)
        CHECK(hf[static_cast<size_t>(i)] +
                  hf[static_cast<size_t>(cubics.regularity_index() - 1 - i)] ==
              static_cast<int>(cubics.dim()));

    auto R3 = PolyRing::make({"x", "y", "z"}, FieldSpec::rationals());
    QuotientAlgebra six = QuotientAlgebra::build(
        ideal({"z^2 - x + 2*z", "x*z - 2*x - y + 4*z", "y^2 - x + z",
               "x^2 - y*z - 4*x - 4*y + 8*z"},
              R3));
    CHECK(hf_inequality_check(six));  // 1 + 4 = 5 <= 6 both ways

    auto R1 = PolyRing::make({"x"}, FieldSpec::rationals());
    CHECK(hf_inequality_check(QuotientAlgebra::build(ideal({"x"}, R1))));  // ri = 0
}

TEST_CASE("full report coherence on mixed examples") {
    auto R = PolyRing::make({"x", "y"}, FieldSpec::rationals());
    PropertyReport rep = analyze(ideal({"x*y", "y^3", "x^4 + x^2"}, R));
    CHECK(!rep.cbp);
    CHECK(!rep.locally_gorenstein);
    CHECK(!rep.gor_and_cbp);
    CHECK(rep.symmetric_hf);
    CHECK(!rep.strict_gorenstein);
    REQUIRE(rep.cbp_failure_witness);

    PropertyReport rep2 = analyze(
        ideal({"y^3 - x", "x^3 - 3*x^2*y - x*y^2 - 2*x^2 - x*y + 5*y^2 + 3*x + 2*y"}, R));
    CHECK(rep2.cbp);
    CHECK(rep2.locally_gorenstein);
    CHECK(rep2.gor_and_cbp);
    CHECK(rep2.strict_cbp);
    CHECK(rep2.strict_gorenstein);
    CHECK(rep2.symmetric_hf);
}

TEST_CASE("verdicts are extension invariant over finite fields") {
    QuotientAlgebra A = three_points_f2();
    QuotientAlgebra B = A.extended_to(FieldSpec::extension_field(2, 2));
    CHECK(check_cbp(A).value == check_cbp(B).value);
    CheckOptions sym;
    sym.mode = DetMode::Symbolic;
    CHECK(check_locally_gorenstein(A, sym).value == check_locally_gorenstein(B, sym).value);
    CHECK(check_gor_cbp(A, sym).value == check_gor_cbp(B, sym).value);
}

TEST_CASE("the evaluated route records the extension it used") {
    QuotientAlgebra A = three_points_f2();
    CheckOptions ev;
    ev.mode = DetMode::Evaluated;
    GorResult g = check_gor_cbp(A, ev);
    CHECK(g.value);
    REQUIRE(g.witness_point);
    REQUIRE(g.field_used);
    CHECK(g.field_used->degree() == 2);

    // capping the extension forces the symbolic fallback, same verdict
    CheckOptions capped = ev;
    capped.max_extension = 1;
    GorResult g2 = check_gor_cbp(A, capped);
    CHECK(g2.value);
    CHECK(g2.det_poly);
}
