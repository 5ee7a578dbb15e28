#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rbjordan/errors.hpp"

namespace rbjordan {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind {
    PrimeField,        // Z_p, p an odd prime
    Rationals,         // exact fractions with arbitrary-precision integers
    RealSymbolic,      // descriptor only, no element arithmetic
    AlgClosedSymbolic, // descriptor only, no element arithmetic
};

/// Largest prime accepted by Field::prime. Every solver in this library may
/// fall back to full enumeration over Z_p^m, so p is kept desk-scale.
inline constexpr int kMaxPrime = 97;

/// Field descriptor. Cheap value type; element arithmetic is only available
/// for PrimeField and Rationals. Text syntax: "Zp:7", "Q", "R", "Cbar".
class Field {
public:
    static Field prime(int p);
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field reals() { return Field(FieldKind::RealSymbolic, 0); }
    static Field alg_closed() { return Field(FieldKind::AlgClosedSymbolic, 0); }
    static Field parse(std::string_view descriptor);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    bool supports_arithmetic() const {
        return kind_ == FieldKind::PrimeField || kind_ == FieldKind::Rationals;
    }
    /// The prime p; throws UnsupportedField for non-prime-field descriptors.
    int p() const;
    std::string descriptor() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(FieldKind kind, int p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    int p_;
};

/// Exact field element in canonical form: residue in [0, p) for Z_p, reduced
/// fraction with positive denominator for Q. Immutable value type.
///
/// Elements of the symbolic fields R and Cbar exist only as rational literals
/// (the index case table reads their signs); every arithmetic operation on
/// them throws UnsupportedField.
class Scalar {
public:
    static Scalar zero(const Field& f) { return of_int(f, 0); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, long long v);
    static Scalar of_fraction(const Field& f, const BigInt& num, const BigInt& den);
    /// Canonical text: residue for Z_p (negative integers accepted and
    /// reduced), "num" or "num/den" for Q.
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// Residue in [0, p); prime fields only.
    std::int64_t residue() const;
    /// Reduced fraction; rationals only.
    const BigRational& rational() const;
    /// Sign of the literal value (-1, 0, +1); rejects prime fields, where
    /// residues carry no order.
    int sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
    /// Canonical ordering: residue order on Z_p, numeric order on Q.
    /// Drives every lexicographic tie-break in the solvers.
    bool operator<(const Scalar& rhs) const;

    std::string str() const;

private:
    explicit Scalar(const Field& f) : field_(f) {}
    void require_same_field(const Scalar& rhs) const;
    void require_arithmetic() const;

    Field field_;
    std::int64_t residue_ = 0; // PrimeField
    BigRational rational_;     // Rationals
};

/// Legendre symbol of a over its prime field: +1 for a nonzero square,
/// 0 for zero, -1 for a nonresidue.
int legendre(const Scalar& a);

/// Square root in Z_p when one exists; the representative in [0, p/2] is
/// returned so constructions are reproducible. Empty when legendre(a) = -1.
std::optional<Scalar> sqrt_mod(const Scalar& a);

/// p mod 4, which is 1 or 3 for every odd prime.
int p_mod4_class(const Field& f);

/// Exact square root over Z_p or Q (nonneg root over Q); empty when the
/// value is not a square in its field.
std::optional<Scalar> exact_sqrt(const Scalar& a);

} // namespace rbjordan
