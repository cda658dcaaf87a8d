#include <doctest.h>

#include <random>

#include "cbcheck/linalg.hpp"

using namespace cbcheck;

namespace {

DenseMatrix from_ints(const std::vector<std::vector<long>>& rows, const FieldSpecPtr& spec) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), spec);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = FieldElement::from_int(spec, rows[i][j]);
    return m;
}

FieldElement cofactor_det(const DenseMatrix& m) {
    const size_t n = m.rows();
    if (n == 0) return FieldElement::one(m.spec());
    if (n == 1) return m.at(0, 0);
    FieldElement acc = FieldElement::zero(m.spec());
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        DenseMatrix minor(n - 1, n - 1, m.spec());
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        FieldElement term = m.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("kernel basics") {
    auto Q = FieldSpec::rationals();
    CHECK(DenseMatrix::identity(4, Q).kernel().empty());
    auto ker = from_ints({{1, 2}, {2, 4}}, Q).kernel();
    REQUIRE(ker.size() == 1);
    // proportional to (-2, 1)
    CHECK(ker[0][0] * FieldElement::one(Q) == -(ker[0][1] + ker[0][1]));
    CHECK(from_ints({{0, 0}, {0, 0}}, Q).rank() == 0);
    CHECK(from_ints({{0, -1}, {-1, 0}}, Q).rank() == 2);
    CHECK(from_ints({{1, 0}}, Q).rank() == 1);
}

TEST_CASE("determinant golden values") {
    auto Q = FieldSpec::rationals();
    CHECK(DenseMatrix::identity(3, Q).det().is_one());
    CHECK(from_ints({{0, 1}, {1, 0}}, Q).det() == FieldElement::from_int(Q, -1));
    CHECK(from_ints({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}, Q).det() ==
          FieldElement::from_int(Q, 4));
    CHECK_THROWS_AS(from_ints({{1, 2}}, Q).det(), LinalgError);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    std::mt19937_64 rng(17);
    auto Q = FieldSpec::rationals();
    auto F7 = FieldSpec::prime_field(7);
    for (int t = 0; t < 60; ++t) {
        const auto& spec = (t % 2 == 0) ? Q : F7;
        size_t n = 1 + rng() % 5;
        DenseMatrix m(n, n, spec);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m.at(i, j) = FieldElement::from_int(spec, static_cast<long>(rng() % 19) - 9);
        FieldElement d = m.det();
        CHECK(d == cofactor_det(m));
        CHECK((d.is_zero()) == (m.rank() < n));
        CHECK((d.is_zero()) == (!m.kernel().empty()));
    }
}

TEST_CASE("matrix algebra") {
    auto Q = FieldSpec::rationals();
    DenseMatrix a = from_ints({{1, 2}, {3, 4}}, Q);
    DenseMatrix b = from_ints({{0, 1}, {1, 0}}, Q);
    CHECK(a * b == from_ints({{2, 1}, {4, 3}}, Q));
    CHECK(a + b == from_ints({{1, 3}, {4, 4}}, Q));
    CHECK(a.transpose() == from_ints({{1, 3}, {2, 4}}, Q));
    CHECK(a.scaled(FieldElement::from_int(Q, 2)) == from_ints({{2, 4}, {6, 8}}, Q));
    CHECK(DenseMatrix::stack({a, b}) == from_ints({{1, 2}, {3, 4}, {0, 1}, {1, 0}}, Q));
}

TEST_CASE("three-point pencil over F_2 needs the quadratic extension") {
    auto F2 = FieldSpec::prime_field(2);
    DenseMatrix V1 = from_ints({{0, 1, 0}, {1, 1, 0}, {0, 0, 0}}, F2);
    DenseMatrix V2 = from_ints({{0, 0, 1}, {0, 0, 0}, {1, 0, 1}}, F2);
    LinearPencil C0({V1, V2}, {"z_2", "z_3"});

    PencilResult sym = C0.det_nonzero(DetMode::Symbolic);
    CHECK(sym.nonzero);
    REQUIRE(sym.symbolic);
    // z_2 z_3 (z_2 + z_3)
    auto zr = PolyRing::make({"z_2", "z_3"}, F2);
    CHECK(*sym.symbolic == parse_polynomial("z_2^2*z_3 + z_2*z_3^2", zr));

    // every point of F_2^2 vanishes, so the witness lives in GF(4)
    for (std::uint64_t a = 0; a < 2; ++a)
        for (std::uint64_t b = 0; b < 2; ++b) {
            std::vector<FieldElement> pt = {FieldElement::prime_residue(F2, a),
                                            FieldElement::prime_residue(F2, b)};
            CHECK(C0.evaluate(pt).det().is_zero());
        }
    PencilResult ev = C0.det_nonzero(DetMode::Evaluated, 1);
    CHECK(ev.nonzero);
    REQUIRE(ev.witness);
    REQUIRE(ev.field_used);
    CHECK(ev.field_used->kind() == FieldKind::ExtensionField);
    CHECK(ev.field_used->characteristic() == 2);
    CHECK(ev.field_used->degree() == 2);
    CHECK(ev.field_used->modulus() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(!C0.evaluate(*ev.witness).det().is_zero());
}

TEST_CASE("symbolic and evaluated pencil verdicts agree on random pencils") {
    std::mt19937_64 rng(23);
    auto Q = FieldSpec::rationals();
    auto F3 = FieldSpec::prime_field(3);
    for (int t = 0; t < 30; ++t) {
        const auto& spec = (t % 2 == 0) ? Q : F3;
        size_t n = 1 + rng() % 4;
        size_t m = 1 + rng() % 2;
        std::vector<DenseMatrix> mats;
        std::vector<std::string> vars;
        for (size_t k = 0; k < m; ++k) {
            DenseMatrix mk(n, n, spec);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    mk.at(i, j) = FieldElement::from_int(spec, static_cast<long>(rng() % 5) - 2);
            mats.push_back(std::move(mk));
            vars.push_back("z_" + std::to_string(k + 1));
        }
        LinearPencil p(std::move(mats), std::move(vars));
        CHECK(p.det_nonzero(DetMode::Symbolic).nonzero ==
              p.det_nonzero(DetMode::Evaluated, 5).nonzero);
    }
}

TEST_CASE("polynomial-entry determinant") {
    auto R = PolyRing::make({"z"}, FieldSpec::rationals());
    Polynomial z = Polynomial::variable(R, 0);
    Polynomial one = Polynomial::constant(R, FieldElement::one(R->field()));
    std::vector<std::vector<Polynomial>> m = {{z, one}, {one, z}};
    CHECK(poly_matrix_det(m, R) == parse_polynomial("z^2 - 1", R));
    std::vector<std::vector<Polynomial>> sing = {{z, z}, {z, z}};
    CHECK(poly_matrix_det(sing, R).is_zero());
}
