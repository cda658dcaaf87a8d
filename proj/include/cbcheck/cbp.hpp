#pragma once

#include "cbcheck/quotient.hpp"

namespace cbcheck {

class CbpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when two provably equivalent characterizations disagree; always an
/// implementation bug, never a legitimate verdict.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// phi = c_1 b_1* + ... + c_d b_d* in the dual of the quotient basis.
struct Functional {
    std::vector<FieldElement> coeffs;
};

/// The matrices of the canonical-module tests. V_j (j = 1..delta) has as its
/// i-th column the (d - delta + j)-th column of the transposed multiplication
/// matrix of b_i; W stacks V_1..V_delta vertically.
struct CanonicalMatrices {
    std::vector<DenseMatrix> V;
    DenseMatrix W;
    int delta = 0;

    static CanonicalMatrices build(const QuotientAlgebra& A);
};

/// Knobs for the determinant-nonvanishing checks. When mode is unset the
/// symbolic route is used for pencils in at most 3 variables and the
/// evaluated route otherwise.
struct CheckOptions {
    std::optional<DetMode> mode;
    std::uint64_t seed = 1;
    unsigned max_extension = 16;
};

struct CbpResult {
    bool value = false;
    /// Coordinates of a nonzero annihilating element when the verdict is false.
    std::optional<std::vector<FieldElement>> witness;

    explicit operator bool() const { return value; }
};

struct GorResult {
    bool value = false;
    /// Evaluation point certifying det != 0 (evaluated route).
    std::optional<std::vector<FieldElement>> witness_point;
    /// Generator of the canonical module, when one was certified.
    std::optional<Functional> generator;
    /// The determinant polynomial (symbolic route).
    std::optional<Polynomial> det_poly;
    FieldSpecPtr field_used;

    explicit operator bool() const { return value; }
};

/// Kernel test on W: true iff Ker(W) = {0}.
CbpResult check_cbp(const QuotientAlgebra& A);

/// det(C) != 0 for the d-variable pencil C whose i-th column is
/// M_B(theta_{b_i})^tr (z_1,..,z_d)^tr.
GorResult check_locally_gorenstein(const QuotientAlgebra& A, const CheckOptions& opts = {});

/// det(C_0) != 0 for C_0 = z_{d-delta+1} V_1 + ... + z_d V_delta.
GorResult check_gor_cbp(const QuotientAlgebra& A, const CheckOptions& opts = {});

/// Fast path for delta = 1: det(V_1) != 0. Throws CbpError when delta != 1.
bool check_cbp_delta1(const QuotientAlgebra& A);

/// Ann_R(phi) = {0} iff det(Lambda_c) != 0 with Lambda_c's i-th column
/// M_B(theta_{b_i})^tr c.
bool annihilator_is_zero(const Functional& phi, const QuotientAlgebra& A);

/// CBP of the associated graded ring, i.e. of P/DF(I).
CbpResult check_strict_cbp(const IdealHandle& I);

/// Both characterizations — (CBP and symmetric Hilbert function) and (strict
/// CBP and delta = 1) — evaluated independently; throws InconsistencyError if
/// they ever disagree.
bool check_strict_gorenstein(const IdealHandle& I);

/// HF(i) + HF(ri - 1 - i) <= dim for i = 0..ri-1.
bool hf_inequality_check(const QuotientAlgebra& A);

/// All verdicts at once, with coherence assertions across them.
struct PropertyReport {
    size_t dim = 0;
    std::vector<int> hf;
    int ri = 0;
    int delta = 1;
    bool cbp = false;
    bool locally_gorenstein = false;
    bool gor_and_cbp = false;
    bool strict_cbp = false;
    bool strict_gorenstein = false;
    bool symmetric_hf = false;
    std::optional<std::vector<FieldElement>> cbp_failure_witness;
    std::optional<Functional> gorenstein_generator;
    std::optional<std::vector<FieldElement>> det_witness_point;
    FieldSpecPtr field_used;
};

PropertyReport analyze(const IdealHandle& I, const CheckOptions& opts = {});

}  // namespace cbcheck
