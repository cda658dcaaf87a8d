#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cbcheck/polynomial.hpp"

namespace cbcheck {

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense matrix over a fixed FieldSpec, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols, const FieldSpecPtr& spec);

    static DenseMatrix identity(size_t n, const FieldSpecPtr& spec);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpecPtr& spec() const { return spec_; }

    FieldElement& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix scaled(const FieldElement& c) const;
    DenseMatrix transpose() const;
    /// Stacks blocks vertically.
    static DenseMatrix stack(const std::vector<DenseMatrix>& blocks);

    bool operator==(const DenseMatrix& o) const;

    /// Basis of the right kernel, by exact Gaussian elimination with
    /// first-nonzero pivoting.
    std::vector<std::vector<FieldElement>> kernel() const;
    size_t rank() const;
    /// Exact determinant via fraction-free (Bareiss) elimination.
    FieldElement det() const;

private:
    size_t rows_ = 0, cols_ = 0;
    FieldSpecPtr spec_;
    std::vector<FieldElement> entries_;
};

enum class DetMode { Symbolic, Evaluated };

struct PencilResult {
    bool nonzero = false;
    /// Evaluation point with det != 0, when found by the evaluated mode.
    std::optional<std::vector<FieldElement>> witness;
    /// det(C(z)) as a polynomial, when computed by the symbolic mode.
    std::optional<Polynomial> symbolic;
    /// Field the witness lives in (an extension of the base for small GF(p)).
    FieldSpecPtr field_used;
};

/// C(z) = z_1 V_1 + ... + z_m V_m with square coefficient matrices.
class LinearPencil {
public:
    LinearPencil(std::vector<DenseMatrix> coeff_matrices, std::vector<std::string> var_names);

    size_t nvars() const { return mats_.size(); }
    size_t dim() const { return mats_.empty() ? 0 : mats_[0].rows(); }
    const std::vector<DenseMatrix>& coefficient_matrices() const { return mats_; }

    DenseMatrix evaluate(const std::vector<FieldElement>& point) const;
    /// det(C(z)) as a polynomial in the pencil variables.
    Polynomial symbolic_det() const;

    /// Decides det(C(z)) != 0. Symbolic mode computes the determinant
    /// polynomial. Evaluated mode searches a (d+1)^m grid after a seeded
    /// random pre-pass, extending small finite base fields to GF(p^k) with
    /// p^k >= d+2 (but never beyond max_extension); when the grid is too
    /// large to sweep or the extension cap is hit it falls back to the
    /// symbolic route so the verdict is always exact.
    PencilResult det_nonzero(DetMode mode, std::uint64_t seed = 1,
                             unsigned max_extension = 16) const;

private:
    std::vector<DenseMatrix> mats_;
    std::vector<std::string> vars_;
};

/// Polynomial-entry determinant via fraction-free elimination (exact division
/// holds over an integral domain).
Polynomial poly_matrix_det(std::vector<std::vector<Polynomial>> m, const PolyRingPtr& ring);

}  // namespace cbcheck
