#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cbcheck/polynomial.hpp"

namespace cbcheck {

class IdealError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reduced monic Groebner basis for a fixed term ordering.
class GroebnerBasis {
public:
    GroebnerBasis(PolyRingPtr ring, TermOrdering ord, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), ord_(ord), gens_(std::move(gens)) {}

    const PolyRingPtr& ring() const { return ring_; }
    const TermOrdering& ordering() const { return ord_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_trivial() const;  // basis == {1}

    /// Unique remainder of f under division by the basis.
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    /// True iff P/I is a finite-dimensional K-vector space; fills the quotient
    /// basis monomials (sorted by degree, then ascending under the ordering).
    bool zero_dimensional(std::vector<Monomial>* quotient_basis = nullptr) const;

private:
    PolyRingPtr ring_;
    TermOrdering ord_;
    std::vector<Polynomial> gens_;
};

/// Buchberger with the normal pair-selection strategy and both elimination
/// criteria; output reduced, monic, sorted by leading term ascending.
GroebnerBasis buchberger(const PolyRingPtr& ring, const std::vector<Polynomial>& gens,
                         const TermOrdering& ord);

/// Division with quotient by a single divisor: f = q*g + r with no monomial of
/// r divisible by LT(g).
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const Polynomial& g, const TermOrdering& ord);

/// Exact division; throws if the remainder is nonzero.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// An ideal given by generators, with lazily computed Groebner bases per
/// ordering. Immutable apart from the cache.
class IdealHandle {
public:
    IdealHandle(PolyRingPtr ring, std::vector<Polynomial> gens);

    // copies/moves take the generators and cached bases; the mutex is fresh
    IdealHandle(const IdealHandle& o);
    IdealHandle(IdealHandle&& o) noexcept;
    IdealHandle& operator=(const IdealHandle& o);
    IdealHandle& operator=(IdealHandle&& o) noexcept;

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const GroebnerBasis& groebner_basis(const TermOrdering& ord) const;
    bool contains(const Polynomial& f) const;
    bool is_zero_ideal() const;

private:
    PolyRingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mtx_;
    mutable std::map<TermOrdering, GroebnerBasis> cache_;
};

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
/// Computed by eliminating an auxiliary variable t from t*I + (1-t)*J.
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);
/// I : J = { g : g*J subseteq I }; J must be nonzero.
IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);
/// DF(I), generated by the degree forms of the reduced DegRevLex basis.
IdealHandle degree_form_ideal(const IdealHandle& a);

}  // namespace cbcheck
