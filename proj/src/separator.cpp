#include "cbcheck/separator.hpp"

#include <algorithm>

namespace cbcheck {

namespace {

/// Reduced row-echelon rows (nonzero only), pivots in column order; a
/// deterministic basis of the row space.
std::vector<std::vector<FieldElement>> rref_rows(std::vector<std::vector<FieldElement>> rows,
                                                 const FieldSpecPtr& spec) {
    if (rows.empty()) return rows;
    const size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[pr], rows[rank]);
        FieldElement inv = rows[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            FieldElement f = rows[i][col];
            for (size_t j = col; j < cols; ++j)
                rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank, std::vector<FieldElement>{});
    (void)spec;
    return rows;
}

Polynomial poly_from_coords(const QuotientAlgebra& A, const std::vector<FieldElement>& c) {
    std::vector<Term> terms;
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) terms.push_back({A.basis()[i], c[i]});
    return Polynomial::from_terms(A.ring(), std::move(terms));
}

}  // namespace

DecompositionInput DecompositionInput::validate(const IdealHandle& I,
                                                std::vector<DecompositionComponent> components) {
    if (components.empty()) throw SeparatorError("decomposition has no components");
    const PolyRingPtr& ring = I.ring();
    for (const auto& c : components)
        if (*c.primary.ring() != *ring || *c.maximal.ring() != *ring)
            throw SeparatorError("decomposition component from a different ring");

    // intersection of the primaries equals I
    std::optional<IdealHandle> cap;
    for (const auto& c : components)
        cap = cap ? ideal_intersection(*cap, c.primary) : c.primary;
    if (!ideal_equal(*cap, I))
        throw SeparatorError("the primary components do not intersect to the given ideal");

    DecompositionInput D;
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        const GroebnerBasis& gm = c.maximal.groebner_basis(TermOrdering::degrevlex());
        if (gm.is_trivial()) throw SeparatorError("a maximal component is the unit ideal");

        // Q_i subseteq M_i
        for (const auto& g : c.primary.gens())
            if (!gm.contains(g))
                throw SeparatorError("a primary component is not contained in its radical");

        // pairwise comaximality
        for (size_t j = i + 1; j < components.size(); ++j) {
            IdealHandle sum = ideal_sum(c.primary, components[j].primary);
            if (!sum.groebner_basis(TermOrdering::degrevlex()).is_trivial())
                throw SeparatorError("two primary components are not comaximal");
        }

        // nilpotency of the radical generators modulo Q_i
        const GroebnerBasis& gq = c.primary.groebner_basis(TermOrdering::degrevlex());
        std::vector<Monomial> qbasis;
        if (!gq.zero_dimensional(&qbasis))
            throw SeparatorError("a primary component is not zero-dimensional");
        const size_t N = qbasis.size();
        for (const auto& g : c.maximal.gens()) {
            Polynomial p = gq.normal_form(g);
            Polynomial acc = Polynomial::constant(ring, FieldElement::one(ring->field()));
            for (size_t e = 0; e < N && !acc.is_zero(); ++e) acc = gq.normal_form(acc * p);
            if (!acc.is_zero())
                throw SeparatorError("a radical generator is not nilpotent modulo its primary");
        }

        // residue basis of P/M_i
        std::vector<Monomial> rbasis;
        if (!gm.zero_dimensional(&rbasis))
            throw SeparatorError("a maximal component is not zero-dimensional");
        std::vector<Polynomial> lifted;
        lifted.reserve(rbasis.size());
        for (const auto& m : rbasis)
            lifted.push_back(Polynomial::monomial(ring, m, FieldElement::one(ring->field())));
        D.residue_bases_.push_back(std::move(lifted));
    }
    D.components_ = std::move(components);
    return D;
}

std::vector<Polynomial> residue_field_basis(const DecompositionInput& D, size_t i) {
    return D.residue_basis(i);
}

SocleSpace socle_space(const IdealHandle& I, const DecompositionInput& D, size_t i,
                       const QuotientAlgebra& A) {
    const auto& comp = D.component(i);
    IdealHandle J = ideal_colon(comp.primary, comp.maximal);
    for (size_t j = 0; j < D.size(); ++j)
        if (j != i) J = ideal_intersection(J, D.component(j).primary);

    const GroebnerBasis& gJ = J.groebner_basis(TermOrdering::degrevlex());
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& g : gJ.gens()) {
        for (const auto& t : A.basis()) {
            Polynomial prod = g.times_monomial(t, FieldElement::one(A.ring()->field()));
            std::vector<FieldElement> c = A.coords(prod);
            bool nonzero = std::any_of(c.begin(), c.end(),
                                       [](const FieldElement& e) { return !e.is_zero(); });
            if (nonzero) rows.push_back(std::move(c));
        }
    }
    rows = rref_rows(std::move(rows), A.ring()->field());

    SocleSpace S;
    S.index = i;
    for (const auto& r : rows) S.basis.push_back(poly_from_coords(A, r));
    S.m = S.basis.size();
    const size_t ell = D.residue_degree(i);
    if (ell == 0 || S.m % ell != 0)
        throw SeparatorError("socle dimension is not a multiple of the residue degree");
    S.k = S.m / ell;
    (void)I;
    return S;
}

bool check_max_sepdeg(const IdealHandle& I, const DecompositionInput& D, size_t i,
                      const QuotientAlgebra& A) {
    SocleSpace S = socle_space(I, D, i, A);
    const std::vector<Polynomial>& e = D.residue_basis(i);
    const size_t ell = e.size();
    const size_t delta = static_cast<size_t>(A.last_difference());
    DenseMatrix M(ell * delta, S.m, A.ring()->field());
    for (size_t j = 0; j < ell; ++j)
        for (size_t k = 0; k < S.m; ++k) {
            std::vector<FieldElement> lf = A.leading_form_coords(e[j] * S.basis[k]);
            for (size_t r = 0; r < delta; ++r) M.at(j * delta + r, k) = lf[r];
        }
    return M.rank() == S.m;
}

int sepdeg_gorenstein_case(const IdealHandle& I, const DecompositionInput& D, size_t i,
                           const QuotientAlgebra& A) {
    SocleSpace S = socle_space(I, D, i, A);
    if (S.k != 1)
        throw SeparatorError("the local factor is not Gorenstein; exact separator degree "
                             "is out of scope");
    const Polynomial& f = S.basis.at(0);
    int best = -1;
    for (const auto& e : D.residue_basis(i)) {
        auto o = A.order_of(e * f);
        if (o) best = std::max(best, *o);
    }
    if (best < 0) throw SeparatorError("socle element vanishes in the quotient");
    return best;
}

bool check_cbp_via_separators(const IdealHandle& I, const DecompositionInput& D,
                              const QuotientAlgebra& A) {
    for (size_t i = 0; i < D.size(); ++i)
        if (!check_max_sepdeg(I, D, i, A)) return false;
    return true;
}

}  // namespace cbcheck
