#include "cbcheck/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cbcheck {

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw PolyError("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::var(size_t nvars, size_t i, int e) {
    std::vector<int> v(nvars, 0);
    v[i] = e;
    return Monomial(std::move(v));
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> v(exps_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    std::vector<int> v(exps_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] - o.exps_[i];
    return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> v(a.exps_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(v));
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

// -------------------------------------------------------------- TermOrdering

Cmp TermOrdering::compare(const Monomial& s, const Monomial& t) const {
    if (s.nvars() != t.nvars()) throw PolyError("monomial ambient mismatch");
    const auto& a = s.exps();
    const auto& b = t.exps();
    switch (kind_) {
        case Kind::DegRevLex: {
            if (s.degree() != t.degree()) return s.degree() < t.degree() ? Cmp::LT : Cmp::GT;
            // last variable where the exponents differ; smaller exponent wins
            for (size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? Cmp::LT : Cmp::GT;
            }
            return Cmp::EQ;
        }
        case Kind::Lex: {
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? Cmp::LT : Cmp::GT;
            }
            return Cmp::EQ;
        }
        case Kind::ElimLast: {
            const size_t n = a.size();
            if (a[n - 1] != b[n - 1]) return a[n - 1] < b[n - 1] ? Cmp::LT : Cmp::GT;
            int da = s.degree() - a[n - 1], db = t.degree() - b[n - 1];
            if (da != db) return da < db ? Cmp::LT : Cmp::GT;
            for (size_t i = n - 1; i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? Cmp::LT : Cmp::GT;
            }
            return Cmp::EQ;
        }
    }
    return Cmp::EQ;
}

std::string TermOrdering::name() const {
    switch (kind_) {
        case Kind::DegRevLex: return "DegRevLex";
        case Kind::Lex: return "Lex";
        case Kind::ElimLast: return "ElimLast";
    }
    return "?";
}

// ---------------------------------------------------------------- Polynomial

namespace {
const TermOrdering kCanonical = TermOrdering::degrevlex();
}

Polynomial Polynomial::constant(const PolyRingPtr& ring, FieldElement c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::monomial(const PolyRingPtr& ring, Monomial m, FieldElement c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(const PolyRingPtr& ring, size_t i) {
    return monomial(ring, Monomial::var(ring->nvars(), i), FieldElement::one(ring->field()));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term(const TermOrdering& ord) const {
    if (terms_.empty()) throw PolyError("leading term of zero polynomial");
    if (ord == kCanonical) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (ord.less(best->mono, t.mono)) best = &t;
    return *best;
}

FieldElement Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement::zero(ring_->field());
}

Polynomial Polynomial::from_terms(const PolyRingPtr& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return kCanonical.compare(x.mono, y.mono) == Cmp::GT;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (*ring_ != *o.ring_) throw PolyError("polynomial ring mismatch");
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Cmp c = kCanonical.compare(terms_[i].mono, o.terms_[j].mono);
        if (c == Cmp::GT) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Cmp::LT) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (*ring_ != *o.ring_) throw PolyError("polynomial ring mismatch");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) acc.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::monic(const TermOrdering& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).coeff.inverse());
}

Polynomial Polynomial::degree_form() const {
    if (is_zero()) throw PolyError("degree form of zero polynomial");
    const int d = degree();
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    const int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coeff.to_string();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;

        std::string ms;
        {
            std::ostringstream mos;
            bool mfirst = true;
            for (size_t i = 0; i < t.mono.nvars(); ++i) {
                int e = t.mono.exp(i);
                if (e == 0) continue;
                if (!mfirst) mos << "*";
                mfirst = false;
                mos << ring_->vars()[i];
                if (e > 1) mos << "^" << e;
            }
            ms = mos.str();
        }
        const bool unit_coeff = (cs == "1");  // sign already peeled off
        if (ms.empty()) {
            if (cs.find(' ') != std::string::npos) os << "(" << (negated ? "-" : "") << cs << ")";
            else os << cs;
        } else if (unit_coeff) {
            os << ms;
        } else if (cs.find(' ') != std::string::npos) {
            // extension-field coefficient with several terms
            os << "(" << (negated ? "-" : "") << cs << ")*" << ms;
        } else {
            os << cs << "*" << ms;
        }
    }
    return os.str();
}

}  // namespace cbcheck
