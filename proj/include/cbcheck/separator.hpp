#pragma once

#include "cbcheck/cbp.hpp"

namespace cbcheck {

class SeparatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DecompositionComponent {
    IdealHandle primary;  // Q_i
    IdealHandle maximal;  // M_i = Rad(Q_i)
};

/// A user-supplied primary decomposition of I, validated on construction:
/// the Q_i intersect to I, Q_i is contained in M_i, the Q_i are pairwise
/// comaximal, every generator of M_i is nilpotent modulo Q_i, and each P/M_i
/// is finite dimensional.
class DecompositionInput {
public:
    static DecompositionInput validate(const IdealHandle& I,
                                       std::vector<DecompositionComponent> components);

    size_t size() const { return components_.size(); }
    const DecompositionComponent& component(size_t i) const { return components_[i]; }
    /// ell_i = dim_K(P/M_i).
    size_t residue_degree(size_t i) const { return residue_bases_[i].size(); }
    /// The DegRevLex quotient basis of P/M_i, lifted to polynomials.
    const std::vector<Polynomial>& residue_basis(size_t i) const { return residue_bases_[i]; }

private:
    DecompositionInput() = default;
    std::vector<DecompositionComponent> components_;
    std::vector<std::vector<Polynomial>> residue_bases_;
};

/// S_i: the elements of R that vanish on the other components and are
/// annihilated by M_i.
struct SocleSpace {
    size_t index = 0;
    std::vector<Polynomial> basis;  // normal forms, deterministic row-reduced
    size_t m = 0;                   // dim_K(S_i)
    size_t k = 0;                   // m / ell_i
};

SocleSpace socle_space(const IdealHandle& I, const DecompositionInput& D, size_t i,
                       const QuotientAlgebra& A);

std::vector<Polynomial> residue_field_basis(const DecompositionInput& D, size_t i);

/// True iff the maximal ideal at component i has separator degree ri(R):
/// the stacked leading-form matrix of the products e_j f_k has full column
/// rank m_i.
bool check_max_sepdeg(const IdealHandle& I, const DecompositionInput& D, size_t i,
                      const QuotientAlgebra& A);

/// Exact separator degree when the local factor is Gorenstein (k_i = 1);
/// throws SeparatorError otherwise.
int sepdeg_gorenstein_case(const IdealHandle& I, const DecompositionInput& D, size_t i,
                           const QuotientAlgebra& A);

/// Conjunction of check_max_sepdeg over all components.
bool check_cbp_via_separators(const IdealHandle& I, const DecompositionInput& D,
                              const QuotientAlgebra& A);

}  // namespace cbcheck
