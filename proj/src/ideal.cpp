#include "cbcheck/ideal.hpp"

#include <algorithm>
#include <deque>

namespace cbcheck {

bool GroebnerBasis::is_trivial() const {
    return gens_.size() == 1 && gens_[0].degree() == 0;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    if (*f.ring() != *ring_) throw IdealError("ambient ring mismatch");
    Polynomial rem = Polynomial::zero(ring_);
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading_term(ord_);
        bool reduced = false;
        for (const auto& g : gens_) {
            const Term& glt = g.leading_term(ord_);
            if (glt.mono.divides(lt.mono)) {
                FieldElement c = lt.coeff / glt.coeff;
                cur = cur - g.times_monomial(lt.mono.divide(glt.mono), c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Polynomial::monomial(ring_, lt.mono, lt.coeff);
            cur = cur - Polynomial::monomial(ring_, lt.mono, lt.coeff);
        }
    }
    return rem;
}

bool GroebnerBasis::zero_dimensional(std::vector<Monomial>* quotient_basis) const {
    const size_t n = ring_->nvars();
    // a pure power of each variable must occur among the leading terms
    std::vector<int> bound(n, -1);
    for (const auto& g : gens_) {
        const Monomial& m = g.leading_term(ord_).mono;
        size_t support = 0, var = 0;
        for (size_t i = 0; i < n; ++i) {
            if (m.exp(i) > 0) {
                ++support;
                var = i;
            }
        }
        if (m.degree() == 0) {
            if (quotient_basis) quotient_basis->clear();
            return true;  // trivial ideal, d = 0
        }
        if (support == 1 && (bound[var] < 0 || m.exp(var) < bound[var])) bound[var] = m.exp(var);
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return false;

    if (quotient_basis) {
        std::vector<Monomial> lts;
        for (const auto& g : gens_) lts.push_back(g.leading_term(ord_).mono);
        std::vector<Monomial> basis;
        std::vector<int> exps(n, 0);
        // enumerate the box below the pure-power bounds, keep monomials outside LT(I)
        auto in_lt_ideal = [&](const Monomial& m) {
            return std::any_of(lts.begin(), lts.end(),
                               [&](const Monomial& l) { return l.divides(m); });
        };
        size_t i = 0;
        for (;;) {
            Monomial m{std::vector<int>(exps)};
            if (!in_lt_ideal(m)) basis.push_back(m);
            for (i = 0; i < n; ++i) {
                if (++exps[i] < bound[i]) break;
                exps[i] = 0;
            }
            if (i == n) break;
        }
        std::sort(basis.begin(), basis.end(), [this](const Monomial& x, const Monomial& y) {
            if (x.degree() != y.degree()) return x.degree() < y.degree();
            return ord_.less(x, y);
        });
        *quotient_basis = std::move(basis);
    }
    return true;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
    const Term& lf = f.leading_term(ord);
    const Term& lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_monomial(l.divide(lf.mono), lf.coeff.inverse());
    Polynomial b = g.times_monomial(l.divide(lg.mono), lg.coeff.inverse());
    return a - b;
}

Polynomial reduce_fully(Polynomial f, const std::vector<Polynomial>& basis,
                        const TermOrdering& ord) {
    GroebnerBasis tmp(f.ring(), ord, basis);
    return tmp.normal_form(f);
}

}  // namespace

GroebnerBasis buchberger(const PolyRingPtr& ring, const std::vector<Polynomial>& gens,
                         const TermOrdering& ord) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (*g.ring() != *ring) throw IdealError("generator from a different ring");
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    }
    if (basis.empty()) return GroebnerBasis(ring, ord, {});

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        // normal strategy: smallest lcm first
        Cmp c = ord.compare(a.lcm, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::LT;
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    };

    std::vector<Pair> pairs;
    auto push_pairs_with = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            pairs.push_back({i, k, Monomial::lcm(basis[i].leading_term(ord).mono,
                                                 basis[k].leading_term(ord).mono)});
        }
        std::sort(pairs.begin(), pairs.end(), pair_less);
    };
    for (size_t k = 1; k < basis.size(); ++k)
        for (size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, Monomial::lcm(basis[i].leading_term(ord).mono,
                                                 basis[k].leading_term(ord).mono)});
    std::sort(pairs.begin(), pairs.end(), pair_less);

    auto chain_criterion = [&](const Pair& p) {
        // exists k with LT(b_k) | lcm and both (i,k), (k,j) already gone
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_term(ord).mono.divides(p.lcm)) continue;
            auto pending = [&](size_t x, size_t y) {
                if (x > y) std::swap(x, y);
                return std::any_of(pairs.begin(), pairs.end(),
                                   [&](const Pair& q) { return q.i == x && q.j == y; });
            };
            if (!pending(p.i, k) && !pending(k, p.j)) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        Pair p = pairs.front();
        pairs.erase(pairs.begin());
        const Monomial& li = basis[p.i].leading_term(ord).mono;
        const Monomial& lj = basis[p.j].leading_term(ord).mono;
        if (li.coprime_with(lj)) continue;  // product criterion
        if (chain_criterion(p)) continue;
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], ord);
        Polynomial r = reduce_fully(std::move(s), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r.monic(ord));
            push_pairs_with(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_term(ord).mono;
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_term(ord).mono;
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce tails
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_fully(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return GroebnerBasis(ring, ord, std::move(reduced));
}

DivisionResult divide(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
    if (g.is_zero()) throw IdealError("division by the zero polynomial");
    Polynomial q = Polynomial::zero(f.ring());
    Polynomial r = Polynomial::zero(f.ring());
    Polynomial cur = f;
    const Term& glt = g.leading_term(ord);
    while (!cur.is_zero()) {
        const Term& lt = cur.leading_term(ord);
        if (glt.mono.divides(lt.mono)) {
            FieldElement c = lt.coeff / glt.coeff;
            Monomial m = lt.mono.divide(glt.mono);
            q = q + Polynomial::monomial(f.ring(), m, c);
            cur = cur - g.times_monomial(m, c);
        } else {
            r = r + Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
            cur = cur - Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
        }
    }
    return {std::move(q), std::move(r)};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    DivisionResult d = divide(f, g, TermOrdering::degrevlex());
    if (!d.remainder.is_zero()) throw IdealError("inexact polynomial division");
    return d.quotient;
}

// ------------------------------------------------------------- IdealHandle

IdealHandle::IdealHandle(PolyRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (*g.ring() != *ring_) throw IdealError("generator from a different ring");
}

IdealHandle::IdealHandle(const IdealHandle& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.mtx_);
    cache_ = o.cache_;
}

IdealHandle::IdealHandle(IdealHandle&& o) noexcept
    : ring_(std::move(o.ring_)), gens_(std::move(o.gens_)), cache_(std::move(o.cache_)) {}

IdealHandle& IdealHandle::operator=(const IdealHandle& o) {
    if (this != &o) {
        ring_ = o.ring_;
        gens_ = o.gens_;
        std::lock_guard<std::mutex> lock(o.mtx_);
        cache_ = o.cache_;
    }
    return *this;
}

IdealHandle& IdealHandle::operator=(IdealHandle&& o) noexcept {
    ring_ = std::move(o.ring_);
    gens_ = std::move(o.gens_);
    cache_ = std::move(o.cache_);
    return *this;
}

const GroebnerBasis& IdealHandle::groebner_basis(const TermOrdering& ord) const {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = cache_.find(ord);
    if (it == cache_.end())
        it = cache_.emplace(ord, buchberger(ring_, gens_, ord)).first;
    return it->second;
}

bool IdealHandle::contains(const Polynomial& f) const {
    return groebner_basis(TermOrdering::degrevlex()).contains(f);
}

bool IdealHandle::is_zero_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_zero(); });
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    if (*a.ring() != *b.ring()) throw IdealError("ambient ring mismatch");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    if (*a.ring() != *b.ring()) throw IdealError("ambient ring mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return IdealHandle(a.ring(), std::move(gens));
}

namespace {

// Maps polynomials into the ring with the auxiliary variable t appended.
Polynomial lift_to_aux(const Polynomial& f, const PolyRingPtr& aux_ring) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> e = t.mono.exps();
        e.push_back(0);
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(aux_ring, std::move(terms));
}

std::optional<Polynomial> drop_aux(const Polynomial& f, const PolyRingPtr& ring) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> e = t.mono.exps();
        if (e.back() != 0) return std::nullopt;
        e.pop_back();
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

std::string fresh_aux_name(const PolyRingPtr& ring) {
    std::string name = "t";
    while (ring->var_index(name)) name += "_";
    return name;
}

}  // namespace

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
    if (*a.ring() != *b.ring()) throw IdealError("ambient ring mismatch");
    const PolyRingPtr& ring = a.ring();
    std::vector<std::string> vars = ring->vars();
    vars.push_back(fresh_aux_name(ring));
    PolyRingPtr aux = PolyRing::make(std::move(vars), ring->field());
    const size_t tn = aux->nvars() - 1;

    Polynomial t = Polynomial::variable(aux, tn);
    Polynomial one_minus_t =
        Polynomial::constant(aux, FieldElement::one(aux->field())) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * lift_to_aux(f, aux));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift_to_aux(g, aux));

    GroebnerBasis gb = buchberger(aux, gens, TermOrdering::elim_last());
    std::vector<Polynomial> result;
    for (const auto& g : gb.gens()) {
        if (auto p = drop_aux(g, ring)) result.push_back(std::move(*p));
    }
    if (result.empty()) result.push_back(Polynomial::zero(ring));
    return IdealHandle(ring, std::move(result));
}

IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b) {
    if (*a.ring() != *b.ring()) throw IdealError("ambient ring mismatch");
    if (b.is_zero_ideal()) throw IdealError("colon by the zero ideal");
    std::optional<IdealHandle> acc;
    for (const auto& f : b.gens()) {
        if (f.is_zero()) continue;
        // I : <f> = (I cap <f>) / f
        IdealHandle fI(a.ring(), {f});
        IdealHandle cap = ideal_intersection(a, fI);
        std::vector<Polynomial> quot;
        for (const auto& g : cap.gens()) {
            if (g.is_zero()) continue;
            quot.push_back(divide_exact(g, f));
        }
        if (quot.empty()) quot.push_back(Polynomial::zero(a.ring()));
        IdealHandle part(a.ring(), std::move(quot));
        if (!acc) acc = std::move(part);
        else acc = ideal_intersection(*acc, part);
    }
    if (!acc) throw IdealError("colon by the zero ideal");
    return std::move(*acc);
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    const GroebnerBasis& ga = a.groebner_basis(TermOrdering::degrevlex());
    const GroebnerBasis& gb = b.groebner_basis(TermOrdering::degrevlex());
    for (const auto& f : a.gens())
        if (!gb.contains(f)) return false;
    for (const auto& g : b.gens())
        if (!ga.contains(g)) return false;
    return true;
}

IdealHandle degree_form_ideal(const IdealHandle& a) {
    const GroebnerBasis& gb = a.groebner_basis(TermOrdering::degrevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : gb.gens()) gens.push_back(g.degree_form());
    if (gens.empty()) gens.push_back(Polynomial::zero(a.ring()));
    return IdealHandle(a.ring(), std::move(gens));
}

}  // namespace cbcheck
