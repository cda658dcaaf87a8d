#include "cbcheck/quotient.hpp"

#include <algorithm>

namespace cbcheck {

QuotientAlgebra::QuotientAlgebra(PolyRingPtr ring, GroebnerBasis gb, std::vector<Monomial> basis)
    : ring_(std::move(ring)), gb_(std::move(gb)), basis_(std::move(basis)) {
    orders_.reserve(basis_.size());
    for (const auto& m : basis_) orders_.push_back(m.degree());
    ri_ = orders_.empty() ? 0 : orders_.back();
    hf_.assign(static_cast<size_t>(ri_) + 1, 0);
    for (int o : orders_)
        for (int i = o; i <= ri_; ++i) hf_[static_cast<size_t>(i)] += 1;
    delta_hf_.resize(hf_.size());
    for (size_t i = 0; i < hf_.size(); ++i)
        delta_hf_[i] = hf_[i] - (i == 0 ? 0 : hf_[i - 1]);
    delta_ = delta_hf_.back();
}

QuotientAlgebra QuotientAlgebra::build(const IdealHandle& ideal) {
    const GroebnerBasis& gb = ideal.groebner_basis(TermOrdering::degrevlex());
    if (gb.is_trivial()) throw QuotientError("quotient ring is zero (ideal is the unit ideal)");
    std::vector<Monomial> basis;
    if (!gb.zero_dimensional(&basis))
        throw QuotientError("quotient ring is not finite dimensional");
    return QuotientAlgebra(gb.ring(), gb, std::move(basis));
}

std::vector<FieldElement> QuotientAlgebra::coords(const Polynomial& f) const {
    Polynomial nf = gb_.normal_form(f);
    std::vector<FieldElement> c(dim(), FieldElement::zero(ring_->field()));
    for (const Term& t : nf.terms()) {
        auto it = std::find(basis_.begin(), basis_.end(), t.mono);
        if (it == basis_.end())
            throw QuotientError("normal form has a monomial outside the quotient basis");
        c[static_cast<size_t>(it - basis_.begin())] = t.coeff;
    }
    return c;
}

Polynomial QuotientAlgebra::basis_poly(size_t i) const {
    return Polynomial::monomial(ring_, basis_[i], FieldElement::one(ring_->field()));
}

std::optional<int> QuotientAlgebra::order_of(const Polynomial& f) const {
    Polynomial nf = gb_.normal_form(f);
    if (nf.is_zero()) return std::nullopt;
    return nf.degree();
}

DenseMatrix QuotientAlgebra::mult_matrix(const Polynomial& f) const {
    const size_t d = dim();
    DenseMatrix m(d, d, ring_->field());
    for (size_t j = 0; j < d; ++j) {
        std::vector<FieldElement> col = coords(f.times_monomial(basis_[j], FieldElement::one(ring_->field())));
        for (size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
    }
    return m;
}

const std::vector<DenseMatrix>& QuotientAlgebra::basis_mult_matrices() const {
    std::lock_guard<std::mutex> lock(mtx_);
    if (mult_cache_.empty()) {
        mult_cache_.reserve(dim());
        for (size_t k = 0; k < dim(); ++k) mult_cache_.push_back(mult_matrix(basis_poly(k)));
    }
    return mult_cache_;
}

std::vector<FieldElement> QuotientAlgebra::leading_form_coords(const Polynomial& f) const {
    std::vector<size_t> top;
    for (size_t i = 0; i < dim(); ++i)
        if (orders_[i] == ri_) top.push_back(i);
    std::vector<FieldElement> c = coords(f);
    std::vector<FieldElement> out;
    out.reserve(top.size());
    for (size_t i : top) out.push_back(c[i]);
    return out;
}

bool QuotientAlgebra::symmetric_hilbert_function() const {
    // criterion 1: HF(i) + HF(ri - 1 - i) == dim for all i
    const int d = static_cast<int>(dim());
    auto hf_at = [&](int i) -> int {
        if (i < 0) return 0;
        if (i >= static_cast<int>(hf_.size())) return d;
        return hf_[static_cast<size_t>(i)];
    };
    bool sym1 = true;
    for (int i = -1; i <= ri_; ++i)
        if (hf_at(i) + hf_at(ri_ - 1 - i) != d) { sym1 = false; break; }
    // criterion 2: the Castelnuovo function is a palindrome on 0..ri
    bool sym2 = true;
    for (int i = 0; i <= ri_; ++i)
        if (delta_hf_[static_cast<size_t>(i)] != delta_hf_[static_cast<size_t>(ri_ - i)]) {
            sym2 = false;
            break;
        }
    if (sym1 != sym2)
        throw QuotientError("internal inconsistency: symmetry criteria disagree");
    return sym1;
}

Polynomial embed_poly(const Polynomial& f, const PolyRingPtr& target) {
    if (*f.ring() == *target) return f;
    if (f.ring()->vars() != target->vars())
        throw QuotientError("embedding between rings with different variables");
    const FieldSpecPtr& src = f.ring()->field();
    const FieldSpecPtr& dst = target->field();
    if (src->kind() == FieldKind::Rationals || dst->kind() != FieldKind::ExtensionField ||
        src->kind() != FieldKind::PrimeField || src->characteristic() != dst->characteristic())
        throw QuotientError("unsupported field embedding");
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const Term& t : f.terms())
        terms.push_back({t.mono, FieldElement::from_int(dst, static_cast<long>(t.coeff.residue()))});
    return Polynomial::from_terms(target, std::move(terms));
}

QuotientAlgebra QuotientAlgebra::extended_to(const FieldSpecPtr& bigger) const {
    PolyRingPtr target = PolyRing::make(ring_->vars(), bigger);
    std::vector<Polynomial> gens;
    gens.reserve(gb_.gens().size());
    for (const auto& g : gb_.gens()) gens.push_back(embed_poly(g, target));
    // a reduced Groebner basis stays one under base-field extension
    GroebnerBasis gb(target, gb_.ordering(), std::move(gens));
    return QuotientAlgebra(target, std::move(gb), basis_);
}

}  // namespace cbcheck
