#include "cbcheck/cbp.hpp"

namespace cbcheck {

namespace {

/// Family W_1..W_d: the i-th column of W_k is the k-th column of
/// M_B(theta_{b_i})^tr, i.e. the k-th row of the multiplication matrix of b_i.
std::vector<DenseMatrix> transposed_column_family(const QuotientAlgebra& A) {
    const size_t d = A.dim();
    const auto& mults = A.basis_mult_matrices();
    std::vector<DenseMatrix> W;
    W.reserve(d);
    for (size_t k = 0; k < d; ++k) {
        DenseMatrix Wk(d, d, A.ring()->field());
        for (size_t i = 0; i < d; ++i)
            for (size_t r = 0; r < d; ++r) Wk.at(r, i) = mults[i].at(k, r);
        W.push_back(std::move(Wk));
    }
    return W;
}

std::vector<std::string> pencil_vars(size_t first, size_t last) {
    std::vector<std::string> names;
    for (size_t k = first; k <= last; ++k) names.push_back("z_" + std::to_string(k));
    return names;
}

DetMode pick_mode(const CheckOptions& opts, size_t nvars) {
    if (opts.mode) return *opts.mode;
    return nvars <= 3 ? DetMode::Symbolic : DetMode::Evaluated;
}

GorResult run_pencil(const LinearPencil& pencil, const CheckOptions& opts) {
    PencilResult pr = pencil.det_nonzero(pick_mode(opts, pencil.nvars()), opts.seed,
                                         opts.max_extension);
    GorResult r;
    r.value = pr.nonzero;
    r.witness_point = std::move(pr.witness);
    r.det_poly = std::move(pr.symbolic);
    r.field_used = pr.field_used;
    if (r.value && r.witness_point) r.generator = Functional{*r.witness_point};
    return r;
}

}  // namespace

CanonicalMatrices CanonicalMatrices::build(const QuotientAlgebra& A) {
    const size_t d = A.dim();
    const int delta = A.last_difference();
    std::vector<DenseMatrix> family = transposed_column_family(A);
    CanonicalMatrices cm;
    cm.delta = delta;
    cm.V.reserve(static_cast<size_t>(delta));
    for (int j = 1; j <= delta; ++j)
        cm.V.push_back(family[d - static_cast<size_t>(delta) + static_cast<size_t>(j) - 1]);
    cm.W = DenseMatrix::stack(cm.V);
    return cm;
}

CbpResult check_cbp(const QuotientAlgebra& A) {
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    auto ker = cm.W.kernel();
    CbpResult r;
    r.value = ker.empty();
    if (!ker.empty()) r.witness = std::move(ker.front());
    return r;
}

GorResult check_locally_gorenstein(const QuotientAlgebra& A, const CheckOptions& opts) {
    const size_t d = A.dim();
    LinearPencil C(transposed_column_family(A), pencil_vars(1, d));
    return run_pencil(C, opts);
}

GorResult check_gor_cbp(const QuotientAlgebra& A, const CheckOptions& opts) {
    const size_t d = A.dim();
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    LinearPencil C0(cm.V, pencil_vars(d - static_cast<size_t>(cm.delta) + 1, d));
    return run_pencil(C0, opts);
}

bool check_cbp_delta1(const QuotientAlgebra& A) {
    if (A.last_difference() != 1)
        throw CbpError("fast path requires the last Hilbert-function difference to be 1");
    CanonicalMatrices cm = CanonicalMatrices::build(A);
    return !cm.V[0].det().is_zero();
}

bool annihilator_is_zero(const Functional& phi, const QuotientAlgebra& A) {
    const size_t d = A.dim();
    if (phi.coeffs.size() != d) throw CbpError("functional length does not match dim");
    std::vector<DenseMatrix> family = transposed_column_family(A);
    DenseMatrix lambda(d, d, A.ring()->field());
    for (size_t k = 0; k < d; ++k) {
        if (phi.coeffs[k].is_zero()) continue;
        lambda = lambda + family[k].scaled(phi.coeffs[k]);
    }
    return !lambda.det().is_zero();
}

CbpResult check_strict_cbp(const IdealHandle& I) {
    IdealHandle df = degree_form_ideal(I);
    QuotientAlgebra G = QuotientAlgebra::build(df);
    return check_cbp(G);
}

bool check_strict_gorenstein(const IdealHandle& I) {
    QuotientAlgebra A = QuotientAlgebra::build(I);
    const bool crit1 = check_cbp(A).value && A.symmetric_hilbert_function();
    const bool crit2 = check_strict_cbp(I).value && A.last_difference() == 1;
    if (crit1 != crit2)
        throw InconsistencyError("strict Gorenstein characterizations disagree");
    return crit1;
}

bool hf_inequality_check(const QuotientAlgebra& A) {
    const int d = static_cast<int>(A.dim());
    const int ri = A.regularity_index();
    auto hf_at = [&](int i) -> int {
        if (i < 0) return 0;
        if (i >= static_cast<int>(A.hilbert().size())) return d;
        return A.hilbert()[static_cast<size_t>(i)];
    };
    for (int i = 0; i < ri; ++i)
        if (hf_at(i) + hf_at(ri - 1 - i) > d) return false;
    return true;
}

PropertyReport analyze(const IdealHandle& I, const CheckOptions& opts) {
    QuotientAlgebra A = QuotientAlgebra::build(I);
    PropertyReport rep;
    rep.dim = A.dim();
    rep.hf = A.hilbert();
    rep.ri = A.regularity_index();
    rep.delta = A.last_difference();

    CbpResult cbp = check_cbp(A);
    rep.cbp = cbp.value;
    rep.cbp_failure_witness = cbp.witness;

    GorResult gor = check_locally_gorenstein(A, opts);
    rep.locally_gorenstein = gor.value;
    rep.gorenstein_generator = gor.generator;
    rep.field_used = gor.field_used;

    GorResult gc = check_gor_cbp(A, opts);
    rep.gor_and_cbp = gc.value;
    rep.det_witness_point = gc.witness_point;
    if (gc.witness_point) rep.field_used = gc.field_used;

    rep.strict_cbp = check_strict_cbp(I).value;
    rep.symmetric_hf = A.symmetric_hilbert_function();
    rep.strict_gorenstein = check_strict_gorenstein(I);

    if (rep.gor_and_cbp != (rep.cbp && rep.locally_gorenstein))
        throw InconsistencyError("canonical-module and determinant verdicts disagree");
    if (rep.strict_cbp && !rep.cbp)
        throw InconsistencyError("strict verdict without the plain property");
    if (rep.strict_gorenstein && !rep.locally_gorenstein)
        throw InconsistencyError("strict Gorenstein without locally Gorenstein");
    if (rep.strict_gorenstein != (rep.cbp && rep.symmetric_hf))
        throw InconsistencyError("strict Gorenstein vs symmetric-function criterion");
    if (rep.strict_gorenstein != (rep.strict_cbp && rep.delta == 1))
        throw InconsistencyError("strict Gorenstein vs strict-CBP criterion");
    if (rep.delta == 1 && rep.cbp != check_cbp_delta1(A))
        throw InconsistencyError("fast-path verdict disagrees with the kernel test");
    return rep;
}

}  // namespace cbcheck
