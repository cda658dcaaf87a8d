#include "cbcheck/linalg.hpp"

#include "cbcheck/ideal.hpp"

#include <algorithm>
#include <random>

namespace cbcheck {

DenseMatrix::DenseMatrix(size_t rows, size_t cols, const FieldSpecPtr& spec)
    : rows_(rows), cols_(cols), spec_(spec),
      entries_(rows * cols, FieldElement::zero(spec)) {}

DenseMatrix DenseMatrix::identity(size_t n, const FieldSpecPtr& spec) {
    DenseMatrix m(n, n, spec);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(spec);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw LinalgError("shape mismatch in matrix product");
    DenseMatrix r(rows_, o.cols_, spec_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("shape mismatch in matrix sum");
    DenseMatrix r(rows_, cols_, spec_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

DenseMatrix DenseMatrix::scaled(const FieldElement& c) const {
    DenseMatrix r(rows_, cols_, spec_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(cols_, rows_, spec_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

DenseMatrix DenseMatrix::stack(const std::vector<DenseMatrix>& blocks) {
    if (blocks.empty()) throw LinalgError("stack of no blocks");
    size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != blocks[0].cols()) throw LinalgError("stack: column mismatch");
        rows += b.rows();
    }
    DenseMatrix r(rows, blocks[0].cols(), blocks[0].spec());
    size_t off = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) r.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::vector<std::vector<FieldElement>> DenseMatrix::kernel() const {
    // row-reduce a working copy, first nonzero pivot per column
    DenseMatrix m = *this;
    std::vector<std::optional<size_t>> pivot_row_of_col(cols_);
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && m.at(pr, col).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (size_t j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col);
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (pivot_row_of_col[free_col]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(spec_));
        v[free_col] = FieldElement::one(spec_);
        for (size_t col = 0; col < cols_; ++col) {
            if (auto pr = pivot_row_of_col[col])
                v[col] = -m.at(*pr, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t DenseMatrix::rank() const { return cols_ - kernel().size(); }

FieldElement DenseMatrix::det() const {
    if (rows_ != cols_) throw LinalgError("determinant of a non-square matrix");
    const size_t n = rows_;
    if (n == 0) return FieldElement::one(spec_);
    DenseMatrix m = *this;
    FieldElement prev = FieldElement::one(spec_);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pr = k;
        while (pr < n && m.at(pr, k).is_zero()) ++pr;
        if (pr == n) return FieldElement::zero(spec_);
        if (pr != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(k, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    FieldElement d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

// ------------------------------------------------------------- LinearPencil

Polynomial poly_matrix_det(std::vector<std::vector<Polynomial>> m, const PolyRingPtr& ring) {
    const size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, FieldElement::one(ring->field()));
    for (const auto& row : m)
        if (row.size() != n) throw LinalgError("determinant of a non-square matrix");
    Polynomial prev = Polynomial::constant(ring, FieldElement::one(ring->field()));
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pr = k;
        while (pr < n && m[pr][k].is_zero()) ++pr;
        if (pr == n) return Polynomial::zero(ring);
        if (pr != k) {
            std::swap(m[pr], m[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return negate ? -d : d;
}

LinearPencil::LinearPencil(std::vector<DenseMatrix> coeff_matrices,
                           std::vector<std::string> var_names)
    : mats_(std::move(coeff_matrices)), vars_(std::move(var_names)) {
    if (mats_.empty()) throw LinalgError("empty pencil");
    if (vars_.size() != mats_.size()) throw LinalgError("pencil variable count mismatch");
    for (const auto& m : mats_) {
        if (m.rows() != m.cols() || m.rows() != mats_[0].rows())
            throw LinalgError("pencil blocks must be square and uniform");
    }
}

DenseMatrix LinearPencil::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != mats_.size()) throw LinalgError("pencil evaluation arity mismatch");
    const FieldSpecPtr spec = point[0].spec();
    const size_t d = dim();
    DenseMatrix r(d, d, spec);
    for (size_t k = 0; k < mats_.size(); ++k) {
        if (point[k].is_zero()) continue;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                const FieldElement& e = mats_[k].at(i, j);
                if (e.is_zero()) continue;
                FieldElement lifted = e;
                if (*e.spec() != *spec) {
                    // constant embedding GF(p) -> GF(p^k)
                    lifted = FieldElement::from_int(spec, static_cast<long>(e.residue()));
                }
                r.at(i, j) = r.at(i, j) + lifted * point[k];
            }
    }
    return r;
}

Polynomial LinearPencil::symbolic_det() const {
    const FieldSpecPtr& spec = mats_[0].spec();
    PolyRingPtr zring = PolyRing::make(vars_, spec);
    const size_t d = dim();
    std::vector<std::vector<Polynomial>> m(d, std::vector<Polynomial>(d, Polynomial::zero(zring)));
    for (size_t k = 0; k < mats_.size(); ++k) {
        Polynomial zk = Polynomial::variable(zring, k);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                const FieldElement& e = mats_[k].at(i, j);
                if (!e.is_zero()) m[i][j] = m[i][j] + zk.scaled(e);
            }
    }
    return poly_matrix_det(std::move(m), zring);
}

namespace {

// elements of S by index; for Q the integers 0,1,...; for finite fields the
// counting enumeration of residues / coefficient vectors
FieldElement sample_element(const FieldSpecPtr& spec, std::uint64_t idx) {
    switch (spec->kind()) {
        case FieldKind::Rationals:
            return FieldElement::from_int(spec, static_cast<long>(idx));
        case FieldKind::PrimeField:
            return FieldElement::prime_residue(spec, idx);
        case FieldKind::ExtensionField: {
            std::vector<std::uint64_t> coeffs(spec->degree(), 0);
            for (unsigned i = 0; i < spec->degree(); ++i) {
                coeffs[i] = idx % spec->characteristic();
                idx /= spec->characteristic();
            }
            return FieldElement::ext_element(spec, std::move(coeffs));
        }
    }
    throw LinalgError("bad spec");
}

// Grids beyond this size are not swept; the symbolic determinant decides
// instead (still exact, and in practice much faster on vanishing pencils).
constexpr std::uint64_t kGridBudget = 4096;

}  // namespace

PencilResult LinearPencil::det_nonzero(DetMode mode, std::uint64_t seed,
                                       unsigned max_extension) const {
    PencilResult res;
    const FieldSpecPtr& base = mats_[0].spec();
    res.field_used = base;

    if (mode == DetMode::Symbolic) {
        res.symbolic = symbolic_det();
        res.nonzero = !res.symbolic->is_zero();
        return res;
    }

    const size_t d = dim();
    const size_t m = mats_.size();
    const std::uint64_t s = static_cast<std::uint64_t>(d) + 1;

    // choose the evaluation field: det is homogeneous of degree d, so a grid
    // S^m with |S| = d+1 decides; small finite fields are extended
    FieldSpecPtr eval_spec = base;
    if (base->is_finite() && base->size() < s) {
        if (base->kind() == FieldKind::ExtensionField) {
            // no embedding machinery for towers; the symbolic route is exact
            res.symbolic = symbolic_det();
            res.nonzero = !res.symbolic->is_zero();
            return res;
        }
        unsigned k = 1;
        mpz_class size = base->characteristic();
        while (size < static_cast<unsigned long>(s)) {
            ++k;
            size *= base->characteristic();
        }
        if (k > max_extension) {
            res.symbolic = symbolic_det();
            res.nonzero = !res.symbolic->is_zero();
            return res;
        }
        eval_spec = FieldSpec::extension_field(base->characteristic(), k);
    }
    res.field_used = eval_spec;

    const std::uint64_t domain =
        eval_spec->is_finite() && eval_spec->size() < s ? eval_spec->size().get_ui() : s;

    // seeded random pre-pass for the common nonzero case
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<FieldElement> pt;
        pt.reserve(m);
        for (size_t k = 0; k < m; ++k) pt.push_back(sample_element(eval_spec, rng() % domain));
        if (!evaluate(pt).det().is_zero()) {
            res.nonzero = true;
            res.witness = std::move(pt);
            return res;
        }
    }

    // deterministic grid pass; a full sweep with no witness certifies zero
    double grid_size = 1;
    for (size_t k = 0; k < m; ++k) grid_size *= static_cast<double>(domain);
    if (grid_size <= static_cast<double>(kGridBudget)) {
        std::vector<std::uint64_t> idx(m, 0);
        for (;;) {
            std::vector<FieldElement> pt;
            pt.reserve(m);
            for (size_t k = 0; k < m; ++k) pt.push_back(sample_element(eval_spec, idx[k]));
            if (!evaluate(pt).det().is_zero()) {
                res.nonzero = true;
                res.witness = std::move(pt);
                return res;
            }
            size_t k = 0;
            for (; k < m; ++k) {
                if (++idx[k] < domain) break;
                idx[k] = 0;
            }
            if (k == m) break;
        }
        res.nonzero = false;
        return res;
    }

    // grid too large to sweep; decide exactly via the symbolic determinant
    res.symbolic = symbolic_det();
    res.nonzero = !res.symbolic->is_zero();
    res.field_used = base;
    return res;
}

}  // namespace cbcheck
