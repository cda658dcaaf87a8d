#pragma once

#include <optional>

#include "cbcheck/ideal.hpp"
#include "cbcheck/linalg.hpp"

namespace cbcheck {

class QuotientError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// R = P/I as a finite-dimensional K-vector space over the degree-filtered
/// DegRevLex quotient basis. Immutable after construction.
class QuotientAlgebra {
public:
    /// Requires I zero-dimensional; throws QuotientError otherwise.
    static QuotientAlgebra build(const IdealHandle& ideal);

    const PolyRingPtr& ring() const { return ring_; }
    const GroebnerBasis& gb() const { return gb_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    /// ord_F(b_i); equals deg(b_i) since the basis is degree filtered.
    const std::vector<int>& orders() const { return orders_; }
    const std::vector<int>& hilbert() const { return hf_; }        // HF^a_R(0..ri)
    const std::vector<int>& castelnuovo() const { return delta_hf_; }
    int regularity_index() const { return ri_; }
    int last_difference() const { return delta_; }

    /// Coordinates of NF(f) in the quotient basis.
    std::vector<FieldElement> coords(const Polynomial& f) const;
    Polynomial basis_poly(size_t i) const;

    /// deg(NF(f)); nullopt when f lies in I.
    std::optional<int> order_of(const Polynomial& f) const;

    /// Matrix of multiplication by f; column j = coords of f * b_j.
    DenseMatrix mult_matrix(const Polynomial& f) const;
    /// Cached matrices for all basis elements.
    const std::vector<DenseMatrix>& basis_mult_matrices() const;

    /// Coordinates of the image of NF(f) in F_ri R / F_{ri-1} R with respect
    /// to the quotient-basis monomials of degree ri; zero when ord < ri.
    std::vector<FieldElement> leading_form_coords(const Polynomial& f) const;

    /// Symmetry of HF^a_R, checked through both equivalent criteria.
    bool symmetric_hilbert_function() const;

    /// Rebuilds the same presentation over another field (entries mapped
    /// coefficient-wise); used for finite-field extension checks.
    QuotientAlgebra extended_to(const FieldSpecPtr& bigger) const;

private:
    QuotientAlgebra(PolyRingPtr ring, GroebnerBasis gb, std::vector<Monomial> basis);

    PolyRingPtr ring_;
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::vector<int> orders_;
    std::vector<int> hf_;
    std::vector<int> delta_hf_;
    int ri_ = 0;
    int delta_ = 1;

    mutable std::mutex mtx_;
    mutable std::vector<DenseMatrix> mult_cache_;
};

/// Maps a GF(p) polynomial into GF(p^k) (or Q unchanged); coefficients embed
/// as constants.
Polynomial embed_poly(const Polynomial& f, const PolyRingPtr& target);

}  // namespace cbcheck
