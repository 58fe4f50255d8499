#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace netarc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of GF(p^k).  The code is the base-p evaluation of the residue
/// polynomial's coefficient vector, so codes run 0..q-1 and the additive
/// identity is code 0, the multiplicative identity code 1.
class FE {
public:
    FE() = default;
    FE(FieldPtr field, uint32_t code);

    uint32_t code() const { return code_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FE operator+(const FE& o) const;
    FE operator-(const FE& o) const;
    FE operator-() const;
    FE operator*(const FE& o) const;
    FE operator/(const FE& o) const;   // throws std::domain_error on zero divisor

    bool operator==(const FE& o) const;
    bool operator!=(const FE& o) const { return !(*this == o); }
    bool operator<(const FE& o) const { return code_ < o.code_; }

    FE inv() const;
    FE pow(uint64_t e) const;
    /// e -> e^(p^i), 0 <= i < k.
    FE frobenius(uint32_t i) const;

    std::string str() const { return std::to_string(code_); }

private:
    FieldPtr field_;
    uint32_t code_ = 0;
};

/// Immutable description of GF(p^k) together with lookup tables for fast
/// arithmetic on raw codes.  Instances are shared via FieldPtr; two fields
/// are interoperable iff p, k and the modulus coincide.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Builds GF(p^k) with the canonical modulus: a fixed table entry for the
    /// common small fields, otherwise the monic irreducible of degree k with
    /// the least base-p code.  Supported range: q = p^k <= 2^20.
    static FieldPtr make(uint32_t p, uint32_t k);
    /// Same, with an explicit monic irreducible modulus (coeffs ascending,
    /// size k+1).  Rejects reducible or non-monic input.
    static FieldPtr make(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
    /// Builds from a prime-power order q.
    static FieldPtr from_order(uint64_t q);
    /// Accepts "p^k", a bare prime-power order, or the full "p^k/mcode" form
    /// produced by descriptor().
    static FieldPtr parse(const std::string& descriptor);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    uint64_t modulus_code() const;
    /// "p^k/mcode" with mcode the base-p code of the modulus.
    std::string descriptor() const;

    bool same(const Field& o) const;

    FE element(uint32_t code) const;
    FE zero() const { return element(0); }
    FE one() const { return element(q_ > 1 ? 1 : 0); }
    /// Embeds an integer through the prime subfield.
    FE from_int(int64_t v) const;
    std::vector<FE> elements() const;

    // Raw code arithmetic; used by the search kernels where FE would be
    // needless overhead.  No cross-field checking here.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;    // throws std::domain_error on 0
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frob(uint32_t a, uint32_t i) const;

private:
    Field() = default;
    void init_tables();

    uint32_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<uint32_t> mod_;        // ascending coefficients, size k+1, monic

    bool use_logs_ = false;
    std::vector<uint32_t> exp_, log_;  // discrete log tables, q <= 2^16
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> frob1_;      // x -> x^p
    std::vector<uint32_t> addtab_;     // q <= 256 and p odd
    uint32_t mul_generic(uint32_t a, uint32_t b) const;
};

/// Dense polynomial over a single field; coefficients ascending, trailing
/// zeros trimmed.
class Poly {
public:
    Poly(FieldPtr field, std::vector<FE> coeffs);
    static Poly from_ints(const FieldPtr& field, const std::vector<int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FE>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FE eval(const FE& x) const;
    std::string str() const;

private:
    FieldPtr field_;
    std::vector<FE> coeffs_;
};

/// All roots in the coefficient field, ascending by code, each listed once.
std::vector<FE> poly_roots(const Poly& f);

/// The subfield GF(p^d) inside GF(p^k), d | k; ascending by code.
std::vector<FE> subfield_elements(const FieldPtr& field, uint32_t d);

/// Least b >= 1 with p^b = +-1 (mod r): the order of p in (Z/rZ)* modulo
/// negation.  Requires r >= 3 and p prime with gcd(p, r) = 1.
uint32_t min_degree_for_halfcyclotomic(uint32_t r, uint32_t p);

bool is_prime(uint64_t n);
/// Writes q = p^k with p prime; false if q is not a prime power.
bool factor_prime_power(uint64_t q, uint32_t& p, uint32_t& k);

}  // namespace netarc
