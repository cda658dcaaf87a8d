#include "cbcheck/field.hpp"

#include <algorithm>
#include <sstream>

namespace cbcheck {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// ---- dense univariate polynomials over GF(p), trailing coefficient first ----

using ZpPoly = std::vector<std::uint64_t>;

std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw FieldError("element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mul(const ZpPoly& f, const ZpPoly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    ZpPoly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    zp_trim(h);
    return h;
}

ZpPoly zp_mod(ZpPoly f, const ZpPoly& m, std::uint64_t p) {
    zp_trim(f);
    const size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = zp_inv(m.back(), p);
    while (f.size() > dm) {
        std::uint64_t c = (f.back() * lead_inv) % p;
        size_t shift = f.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) {
            std::uint64_t sub = (c * m[i]) % p;
            f[shift + i] = (f[shift + i] + p - sub) % p;
        }
        zp_trim(f);
    }
    return f;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

ZpPoly zp_powmod_x(mpz_class e, const ZpPoly& m, std::uint64_t p) {
    // x^e mod m
    ZpPoly result{1};
    ZpPoly base{0, 1};
    base = zp_mod(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = zp_mod(zp_mul(result, base, p), m, p);
        base = zp_mod(zp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

// f monic of degree k; irreducible iff gcd(x^(p^i) - x, f) = 1 for i = 1..k/2
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    mpz_class q = p;
    for (unsigned i = 1; 2 * i <= k; ++i) {
        ZpPoly xq = zp_powmod_x(q, f, p);
        // xq - x
        if (xq.size() < 2) xq.resize(2, 0);
        xq[1] = (xq[1] + p - 1) % p;
        zp_trim(xq);
        ZpPoly g = zp_gcd(f, xq, p);
        if (g.size() != 1) return false;
        q *= p;
    }
    return true;
}

ZpPoly find_irreducible(std::uint64_t p, unsigned k) {
    // monic degree k; lexicographically smallest coefficient vector
    // (c_0, c_1, ..., c_{k-1}) in counting order
    ZpPoly f(k + 1, 0);
    f[k] = 1;
    mpz_class total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (mpz_class idx = 0; idx < total; ++idx) {
        mpz_class rest = idx;
        for (unsigned i = 0; i < k; ++i) {
            mpz_class digit = rest % p;
            // most significant digit of idx goes to c_0 so that the search is
            // lexicographic in (c_0, ..., c_{k-1})
            f[k - 1 - i] = digit.get_ui();
            rest /= p;
        }
        if (zp_irreducible(f, p)) return f;
    }
    throw FieldError("no irreducible polynomial found");  // unreachable
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

std::shared_ptr<const FieldSpec> FieldSpec::rationals() {
    static std::shared_ptr<const FieldSpec> q(
        new FieldSpec(FieldKind::Rationals, 0, 0, {}));
    return q;
}

std::shared_ptr<const FieldSpec> FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw FieldError("GF(p): " + std::to_string(p) + " is not prime");
    return std::shared_ptr<const FieldSpec>(new FieldSpec(FieldKind::PrimeField, p, 1, {}));
}

std::shared_ptr<const FieldSpec> FieldSpec::extension_field(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw FieldError("GF(p^k): " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("GF(p^k): degree must be >= 1");
    if (k == 1) return prime_field(p);
    if (k > 16) throw FieldError("GF(p^k): extension degree limited to 16");
    return std::shared_ptr<const FieldSpec>(
        new FieldSpec(FieldKind::ExtensionField, p, k, find_irreducible(p, k)));
}

std::shared_ptr<const FieldSpec> FieldSpec::extension_field(std::uint64_t p, unsigned k,
                                                            std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw FieldError("GF(p^k): " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("GF(p^k): degree must be >= 1");
    for (auto& c : modulus) c %= p;
    zp_trim(modulus);
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw FieldError("GF(p^k): modulus must be monic of degree k");
    if (!zp_irreducible(modulus, p))
        throw FieldError("GF(p^k): modulus is reducible over GF(p)");
    if (k == 1) return prime_field(p);
    return std::shared_ptr<const FieldSpec>(
        new FieldSpec(FieldKind::ExtensionField, p, k, std::move(modulus)));
}

mpz_class FieldSpec::size() const {
    if (kind_ == FieldKind::Rationals) throw FieldError("Q is infinite");
    mpz_class s = 1;
    for (unsigned i = 0; i < k_; ++i) s *= p_;
    return s;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return "Q";
        case FieldKind::PrimeField:
            return "GF(" + std::to_string(p_) + ")";
        case FieldKind::ExtensionField: {
            std::ostringstream os;
            os << "GF(" << p_ << "^" << k_ << "; ";
            bool first = true;
            for (unsigned i = k_ + 1; i-- > 0;) {
                if (modulus_[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0 || modulus_[i] != 1) os << modulus_[i];
                if (i >= 1) {
                    if (modulus_[i] != 1) os << "*";
                    os << "a";
                    if (i > 1) os << "^" << i;
                }
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

// ------------------------------------------------------------- FieldElement

FieldElement FieldElement::zero(const FieldSpecPtr& spec) {
    switch (spec->kind()) {
        case FieldKind::Rationals:
            return FieldElement(spec, mpq_class(0));
        case FieldKind::PrimeField:
            return FieldElement(spec, std::uint64_t{0});
        case FieldKind::ExtensionField:
            return FieldElement(spec, std::vector<std::uint64_t>(spec->degree(), 0));
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::one(const FieldSpecPtr& spec) { return from_int(spec, 1); }

FieldElement FieldElement::from_int(const FieldSpecPtr& spec, long n) {
    switch (spec->kind()) {
        case FieldKind::Rationals:
            return FieldElement(spec, mpq_class(n));
        case FieldKind::PrimeField: {
            std::int64_t r = n % static_cast<std::int64_t>(spec->characteristic());
            if (r < 0) r += static_cast<std::int64_t>(spec->characteristic());
            return FieldElement(spec, static_cast<std::uint64_t>(r));
        }
        case FieldKind::ExtensionField: {
            std::vector<std::uint64_t> v(spec->degree(), 0);
            std::int64_t r = n % static_cast<std::int64_t>(spec->characteristic());
            if (r < 0) r += static_cast<std::int64_t>(spec->characteristic());
            v[0] = static_cast<std::uint64_t>(r);
            return FieldElement(spec, std::move(v));
        }
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::from_mpq(const FieldSpecPtr& spec, const mpq_class& q) {
    if (spec->kind() == FieldKind::Rationals) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElement(spec, std::move(c));
    }
    // embed p/q into a finite field
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class p(static_cast<unsigned long>(spec->characteristic()));
    mpz_class nr = num % p;
    if (nr < 0) nr += p;
    mpz_class dr = den % p;
    if (dr < 0) dr += p;
    if (dr == 0) throw FieldError("coefficient denominator vanishes in GF(p)");
    FieldElement n = from_int(spec, nr.get_si());
    FieldElement d = from_int(spec, dr.get_si());
    return n / d;
}

FieldElement FieldElement::prime_residue(const FieldSpecPtr& spec, std::uint64_t r) {
    if (spec->kind() != FieldKind::PrimeField) throw FieldError("prime_residue: not GF(p)");
    return FieldElement(spec, r % spec->characteristic());
}

FieldElement FieldElement::ext_element(const FieldSpecPtr& spec, std::vector<std::uint64_t> coeffs) {
    if (spec->kind() != FieldKind::ExtensionField) throw FieldError("ext_element: not GF(p^k)");
    coeffs.resize(spec->degree(), 0);
    for (auto& c : coeffs) c %= spec->characteristic();
    return FieldElement(spec, std::move(coeffs));
}

FieldElement FieldElement::generator(const FieldSpecPtr& spec) {
    if (spec->kind() == FieldKind::PrimeField)
        return FieldElement(spec, std::uint64_t{0});  // a == root of (a) == 0 in GF(p)
    std::vector<std::uint64_t> v(spec->degree(), 0);
    if (spec->degree() >= 2) v[1] = 1;
    return ext_element(spec, std::move(v));
}

bool FieldElement::is_zero() const {
    switch (spec_->kind()) {
        case FieldKind::Rationals:
            return std::get<mpq_class>(value_) == 0;
        case FieldKind::PrimeField:
            return std::get<std::uint64_t>(value_) == 0;
        case FieldKind::ExtensionField: {
            const auto& v = std::get<std::vector<std::uint64_t>>(value_);
            return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
        }
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(spec_); }

void FieldElement::check_same_spec(const FieldElement& o) const {
    if (!spec_ || !o.spec_ || *spec_ != *o.spec_)
        throw FieldError("field spec mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_spec(o);
    switch (spec_->kind()) {
        case FieldKind::Rationals: {
            mpq_class r = std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_);
            return FieldElement(spec_, std::move(r));
        }
        case FieldKind::PrimeField:
            return FieldElement(
                spec_, (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_)) %
                           spec_->characteristic());
        case FieldKind::ExtensionField: {
            auto v = std::get<std::vector<std::uint64_t>>(value_);
            const auto& w = std::get<std::vector<std::uint64_t>>(o.value_);
            for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) % spec_->characteristic();
            return FieldElement(spec_, std::move(v));
        }
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::operator-() const {
    switch (spec_->kind()) {
        case FieldKind::Rationals:
            return FieldElement(spec_, mpq_class(-std::get<mpq_class>(value_)));
        case FieldKind::PrimeField: {
            std::uint64_t r = std::get<std::uint64_t>(value_);
            return FieldElement(spec_, r == 0 ? 0 : spec_->characteristic() - r);
        }
        case FieldKind::ExtensionField: {
            auto v = std::get<std::vector<std::uint64_t>>(value_);
            for (auto& c : v)
                if (c != 0) c = spec_->characteristic() - c;
            return FieldElement(spec_, std::move(v));
        }
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_spec(o);
    switch (spec_->kind()) {
        case FieldKind::Rationals: {
            mpq_class r = std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_);
            return FieldElement(spec_, std::move(r));
        }
        case FieldKind::PrimeField:
            return FieldElement(
                spec_, (std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(o.value_)) %
                           spec_->characteristic());
        case FieldKind::ExtensionField: {
            const auto& v = std::get<std::vector<std::uint64_t>>(value_);
            const auto& w = std::get<std::vector<std::uint64_t>>(o.value_);
            ZpPoly prod = zp_mul(v, w, spec_->characteristic());
            if (!prod.empty()) prod = zp_mod(std::move(prod), spec_->modulus(), spec_->characteristic());
            prod.resize(spec_->degree(), 0);
            return FieldElement(spec_, std::move(prod));
        }
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    switch (spec_->kind()) {
        case FieldKind::Rationals:
            return FieldElement(spec_, mpq_class(1) / std::get<mpq_class>(value_));
        case FieldKind::PrimeField:
            return FieldElement(spec_,
                                zp_inv(std::get<std::uint64_t>(value_), spec_->characteristic()));
        case FieldKind::ExtensionField: {
            // extended Euclid on (value, modulus) over GF(p)
            const std::uint64_t p = spec_->characteristic();
            ZpPoly r0 = spec_->modulus();
            ZpPoly r1 = std::get<std::vector<std::uint64_t>>(value_);
            zp_trim(r1);
            ZpPoly t0{}, t1{1};
            while (!r1.empty()) {
                // divide r0 by r1: quotient q, remainder r
                ZpPoly q;
                ZpPoly rem = r0;
                zp_trim(rem);
                const std::uint64_t li = zp_inv(r1.back(), p);
                if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
                while (rem.size() >= r1.size() && !rem.empty()) {
                    std::uint64_t c = (rem.back() * li) % p;
                    size_t shift = rem.size() - r1.size();
                    q[shift] = c;
                    for (size_t i = 0; i < r1.size(); ++i) {
                        std::uint64_t sub = (c * r1[i]) % p;
                        rem[shift + i] = (rem[shift + i] + p - sub) % p;
                    }
                    zp_trim(rem);
                }
                ZpPoly qt1 = zp_mul(q, t1, p);
                ZpPoly nt = t0;
                nt.resize(std::max(nt.size(), qt1.size()), 0);
                for (size_t i = 0; i < qt1.size(); ++i) nt[i] = (nt[i] + p - qt1[i]) % p;
                zp_trim(nt);
                t0 = std::move(t1);
                t1 = std::move(nt);
                r0 = std::move(r1);
                r1 = std::move(rem);
            }
            if (r0.size() != 1) throw FieldError("element not invertible");
            const std::uint64_t scale = zp_inv(r0[0], p);
            for (auto& c : t0) c = (c * scale) % p;
            t0.resize(spec_->degree(), 0);
            return FieldElement(spec_, std::move(t0));
        }
    }
    throw FieldError("bad spec");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_spec(o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = one(spec_);
    FieldElement base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_spec(o);
    return value_ == o.value_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_spec(o);
    return value_ < o.value_;
}

const mpq_class& FieldElement::rational() const { return std::get<mpq_class>(value_); }

std::uint64_t FieldElement::residue() const { return std::get<std::uint64_t>(value_); }

const std::vector<std::uint64_t>& FieldElement::ext_coeffs() const {
    return std::get<std::vector<std::uint64_t>>(value_);
}

std::string FieldElement::to_string() const {
    switch (spec_->kind()) {
        case FieldKind::Rationals: {
            const mpq_class& q = std::get<mpq_class>(value_);
            return q.get_str();
        }
        case FieldKind::PrimeField:
            return std::to_string(std::get<std::uint64_t>(value_));
        case FieldKind::ExtensionField: {
            const auto& v = std::get<std::vector<std::uint64_t>>(value_);
            std::ostringstream os;
            bool first = true;
            for (unsigned i = static_cast<unsigned>(v.size()); i-- > 0;) {
                if (v[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0 || v[i] != 1) os << v[i];
                if (i >= 1) {
                    if (v[i] != 1) os << "*";
                    os << "a";
                    if (i > 1) os << "^" << i;
                }
            }
            if (first) os << "0";
            return os.str();
        }
    }
    return "?";
}

}  // namespace cbcheck
