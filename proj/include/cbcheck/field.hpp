#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace cbcheck {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField, ExtensionField };

/// Base field description: Q, GF(p), or GF(p^k) modulo an irreducible polynomial.
/// Immutable; share via shared_ptr.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> rationals();
    static std::shared_ptr<const FieldSpec> prime_field(std::uint64_t p);
    /// GF(p^k) with the lexicographically smallest monic irreducible modulus.
    static std::shared_ptr<const FieldSpec> extension_field(std::uint64_t p, unsigned k);
    /// GF(p^k) with an explicit modulus, coefficients c[0] + c[1] a + ... + c[k] a^k.
    static std::shared_ptr<const FieldSpec> extension_field(std::uint64_t p, unsigned k,
                                                            std::vector<std::uint64_t> modulus);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    bool is_finite() const { return kind_ != FieldKind::Rationals; }
    /// Field size for finite fields (p^k); throws for Q.
    mpz_class size() const;

    bool operator==(const FieldSpec& other) const;
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    FieldSpec(FieldKind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
        : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::vector<std::uint64_t> modulus_;  // length k+1, monic; empty for Q and GF(p)
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec. Payload is a reduced fraction (Q), a residue in
/// [0,p) (GF(p)), or a dense coefficient vector of length k (GF(p^k)).
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const FieldSpecPtr& spec);
    static FieldElement one(const FieldSpecPtr& spec);
    /// Embeds a signed integer into any field.
    static FieldElement from_int(const FieldSpecPtr& spec, long n);
    static FieldElement from_mpq(const FieldSpecPtr& spec, const mpq_class& q);
    static FieldElement prime_residue(const FieldSpecPtr& spec, std::uint64_t r);
    static FieldElement ext_element(const FieldSpecPtr& spec, std::vector<std::uint64_t> coeffs);
    /// The residue class of `a` in GF(p^k).
    static FieldElement generator(const FieldSpecPtr& spec);

    const FieldSpecPtr& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(const mpz_class& e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Total order usable as a map key; not compatible with arithmetic.
    bool operator<(const FieldElement& o) const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    const std::vector<std::uint64_t>& ext_coeffs() const;

    std::string to_string() const;

private:
    FieldElement(FieldSpecPtr spec, std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>> v)
        : spec_(std::move(spec)), value_(std::move(v)) {}

    void check_same_spec(const FieldElement& o) const;

    FieldSpecPtr spec_;
    std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>> value_;
};

}  // namespace cbcheck
