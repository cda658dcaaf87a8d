#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbcheck/field.hpp"

namespace cbcheck {

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ambient polynomial ring: ordered variable names over a base field.
/// Variable precedence is declaration order (first = highest).
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, FieldSpecPtr field)
        : vars_(std::move(vars)), field_(std::move(field)) {}

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars, FieldSpecPtr field) {
        return std::make_shared<const PolyRing>(std::move(vars), std::move(field));
    }

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const FieldSpecPtr& field() const { return field_; }
    std::optional<size_t> var_index(const std::string& name) const;

    bool operator==(const PolyRing& o) const {
        return vars_ == o.vars_ && *field_ == *o.field_;
    }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
    FieldSpecPtr field_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// A power product; exponent vector of length nvars with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(size_t nvars, size_t i, int e = 1);

    const std::vector<int>& exps() const { return exps_; }
    int exp(size_t i) const { return exps_[i]; }
    int degree() const { return degree_; }
    size_t nvars() const { return exps_.size(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // *this / o; requires o | *this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

enum class Cmp { LT, EQ, GT };

/// Term orderings on monomials. DegRevLex and Lex per the usual definitions;
/// ElimLast is the block ordering (degree in the last variable, then DegRevLex
/// on the rest) used to eliminate an auxiliary variable.
class TermOrdering {
public:
    enum class Kind { DegRevLex, Lex, ElimLast };

    static TermOrdering degrevlex() { return TermOrdering(Kind::DegRevLex); }
    static TermOrdering lex() { return TermOrdering(Kind::Lex); }
    static TermOrdering elim_last() { return TermOrdering(Kind::ElimLast); }

    Kind kind() const { return kind_; }
    bool is_degree_compatible() const { return kind_ == Kind::DegRevLex; }

    Cmp compare(const Monomial& s, const Monomial& t) const;
    bool less(const Monomial& s, const Monomial& t) const { return compare(s, t) == Cmp::LT; }

    bool operator==(const TermOrdering& o) const { return kind_ == o.kind_; }
    bool operator<(const TermOrdering& o) const { return kind_ < o.kind_; }

    std::string name() const;

private:
    explicit TermOrdering(Kind k) : kind_(k) {}
    Kind kind_;
};

struct Term {
    Monomial mono;
    FieldElement coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted descending under
/// DegRevLex; no zero coefficients are stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolyRingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const PolyRingPtr& ring, FieldElement c);
    static Polynomial monomial(const PolyRingPtr& ring, Monomial m, FieldElement c);
    static Polynomial variable(const PolyRingPtr& ring, size_t i);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    int degree() const;  // -1 for the zero polynomial

    const Term& leading_term(const TermOrdering& ord) const;
    FieldElement coeff_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
    Polynomial monic(const TermOrdering& ord) const;

    /// Homogeneous component of top degree.
    Polynomial degree_form() const;
    bool is_homogeneous() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

    /// Builds from unsorted terms; combines duplicates, drops zeros.
    static Polynomial from_terms(const PolyRingPtr& ring, std::vector<Term> terms);

private:
    PolyRingPtr ring_;
    std::vector<Term> terms_;  // descending DegRevLex
};

/// Parses the polynomial input grammar. Coefficients are integers, fractions
/// `p/q`, or expressions in the extension generator `a`; `*` is optional
/// between a coefficient and a variable; `^` denotes powers; parentheses are
/// allowed. Throws PolyError with line/column on bad input.
Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring);

}  // namespace cbcheck
