#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dexsym {

/// Error type for all contract violations (dimension/field mismatches,
/// parse failures, out-of-domain parameters, exceeded budgets).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rational, Prime };

/// Ground field of a computation: the rationals or GF(p) for a prime p.
/// Primality is checked at construction.
class FieldSpec {
  public:
    static FieldSpec rational() { return FieldSpec(FieldKind::Rational, 0); }
    static FieldSpec prime(unsigned long p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    /// 0 for the rationals, p for GF(p).
    unsigned long characteristic() const { return p_; }
    /// The prime modulus; calling this on the rational field is an error.
    unsigned long modulus() const;

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;

  private:
    FieldSpec(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    unsigned long p_;
};

/// Exact field element tagged with its field. Rational values are kept as
/// reduced fractions with positive denominator; GF(p) values as the residue
/// in [0, p). Arithmetic never rounds and mixing fields throws.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rational()), v_(0) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(long n, const FieldSpec& f);
    /// Embeds an exact rational into the field. For GF(p) the denominator
    /// must be invertible mod p, otherwise the value does not embed.
    static Scalar of_rat(const mpq_class& q, const FieldSpec& f);
    /// Parses "a" or "a/b" (base 10, optional leading minus).
    static Scalar parse(const std::string& s, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    /// Canonical value: reduced fraction, or the residue as an integer.
    const mpq_class& rat() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    /// Canonical string: "a" or "a/b" (residue in decimal for GF(p)).
    std::string str() const { return v_.get_str(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  private:
    Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {}
    void reduce_mod_p();
    static void check_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    mpq_class v_;
};

}  // namespace dexsym
