#include "rbjordan/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace rbjordan {
namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t v, int p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, int p) {
    std::int64_t acc = 1;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::int64_t mod_inverse(std::int64_t v, int p) {
    v = mod_reduce(v, p);
    if (v == 0) throw DivisionByZero();
    return mod_pow(v, p - 2, p);
}

// sqrt_of[a] is the root of a in [0, p/2], or -1 when a is a nonresidue.
struct SquareTable {
    std::vector<int> sqrt_of;
};

const SquareTable& square_table(int p) {
    static std::mutex mutex;
    static std::map<int, SquareTable> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = tables.find(p);
    if (it == tables.end()) {
        SquareTable t;
        t.sqrt_of.assign(static_cast<std::size_t>(p), -1);
        // x and p-x share a square; scanning x = 0..p/2 upward records the
        // smaller root first and keeps it.
        for (int x = 0; x <= p / 2; ++x) {
            int sq = x * x % p;
            if (t.sqrt_of[static_cast<std::size_t>(sq)] < 0) {
                t.sqrt_of[static_cast<std::size_t>(sq)] = x;
            }
        }
        it = tables.emplace(p, std::move(t)).first;
    }
    return it->second;
}

} // namespace

Field Field::prime(int p) {
    if (!is_odd_prime(p) || p > kMaxPrime) {
        throw UnsupportedField("prime field requires an odd prime p with 3 <= p <= " +
                               std::to_string(kMaxPrime) + ", got " + std::to_string(p));
    }
    return Field(FieldKind::PrimeField, p);
}

Field Field::parse(std::string_view descriptor) {
    if (descriptor == "Q") return rationals();
    if (descriptor == "R") return reals();
    if (descriptor == "Cbar") return alg_closed();
    constexpr std::string_view prefix = "Zp:";
    if (descriptor.substr(0, prefix.size()) == prefix) {
        std::string_view digits = descriptor.substr(prefix.size());
        if (!digits.empty() && digits.size() <= 3) {
            int p = 0;
            bool ok = true;
            for (char c : digits) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    ok = false;
                    break;
                }
                p = p * 10 + (c - '0');
            }
            if (ok) return prime(p);
        }
    }
    throw UnsupportedField("unrecognized field descriptor '" + std::string(descriptor) +
                           "' (expected Zp:<p>, Q, R, or Cbar)");
}

int Field::p() const {
    if (!is_prime_field()) {
        throw UnsupportedField("field " + descriptor() + " has no characteristic p");
    }
    return p_;
}

std::string Field::descriptor() const {
    switch (kind_) {
    case FieldKind::PrimeField: return "Zp:" + std::to_string(p_);
    case FieldKind::Rationals: return "Q";
    case FieldKind::RealSymbolic: return "R";
    case FieldKind::AlgClosedSymbolic: return "Cbar";
    }
    throw Error("corrupt field descriptor");
}

Scalar Scalar::of_int(const Field& f, long long v) {
    Scalar s(f);
    if (f.is_prime_field()) {
        s.residue_ = mod_reduce(v, f.p());
    } else {
        s.rational_ = BigRational(v);
    }
    return s;
}

Scalar Scalar::of_fraction(const Field& f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    if (f.is_prime_field()) {
        int p = f.p();
        std::int64_t n = static_cast<std::int64_t>(num % p);
        std::int64_t d = static_cast<std::int64_t>(den % p);
        Scalar s(f);
        s.residue_ = mod_reduce(n, p) * mod_inverse(d, p) % p;
        return s;
    }
    Scalar s(f);
    // cpp_rational's two-argument constructor requires den > 0.
    s.rational_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
    return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    std::string_view rest = text;
    auto read_integer = [&rest, &text]() -> BigInt {
        std::size_t i = 0;
        if (i < rest.size() && (rest[i] == '+' || rest[i] == '-')) ++i;
        std::size_t digits_begin = i;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == digits_begin) {
            throw ParseError("bad scalar literal '" + std::string(text) + "'");
        }
        BigInt value(std::string(rest.substr(0, i)));
        rest.remove_prefix(i);
        return value;
    };

    BigInt num = read_integer();
    BigInt den = 1;
    if (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
        den = read_integer();
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (!rest.empty()) {
        throw ParseError("trailing characters in scalar literal '" + std::string(text) + "'");
    }
    if (f.is_prime_field() && den % f.p() == 0) {
        throw ParseError("denominator divisible by p in '" + std::string(text) + "'");
    }
    return of_fraction(f, num, den);
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? residue_ == 0 : rational_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? residue_ == 1 : rational_ == 1;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) {
        throw UnsupportedField("residue() requires a prime field, have " + field_.descriptor());
    }
    return residue_;
}

const BigRational& Scalar::rational() const {
    if (field_.kind() != FieldKind::Rationals) {
        throw UnsupportedField("rational() requires Q, have " + field_.descriptor());
    }
    return rational_;
}

int Scalar::sign() const {
    if (field_.is_prime_field()) {
        throw UnsupportedField("residues mod p carry no sign");
    }
    return rational_ < 0 ? -1 : (rational_ == 0 ? 0 : 1);
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw MixedFields("cannot combine " + field_.descriptor() + " and " +
                          rhs.field_.descriptor() + " elements");
    }
}

void Scalar::require_arithmetic() const {
    if (!field_.supports_arithmetic()) {
        throw UnsupportedField("field " + field_.descriptor() +
                               " admits no element arithmetic");
    }
}

Scalar Scalar::operator-() const {
    require_arithmetic();
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = residue_ == 0 ? 0 : field_.p() - residue_;
    } else {
        s.rational_ = -rational_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    require_arithmetic();
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = (residue_ + rhs.residue_) % field_.p();
    } else {
        s.rational_ = rational_ + rhs.rational_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    require_arithmetic();
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = residue_ * rhs.residue_ % field_.p();
    } else {
        s.rational_ = rational_ * rhs.rational_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::inverse() const {
    require_arithmetic();
    if (is_zero()) throw DivisionByZero();
    Scalar s(field_);
    if (field_.is_prime_field()) {
        s.residue_ = mod_inverse(residue_, field_.p());
    } else {
        s.rational_ = 1 / rational_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_field(rhs);
    return field_.is_prime_field() ? residue_ == rhs.residue_ : rational_ == rhs.rational_;
}

bool Scalar::operator<(const Scalar& rhs) const {
    require_same_field(rhs);
    return field_.is_prime_field() ? residue_ < rhs.residue_ : rational_ < rhs.rational_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(residue_);
    std::ostringstream out;
    out << boost::multiprecision::numerator(rational_);
    if (boost::multiprecision::denominator(rational_) != 1) {
        out << '/' << boost::multiprecision::denominator(rational_);
    }
    return out.str();
}

int legendre(const Scalar& a) {
    int p = a.field().p();
    if (a.is_zero()) return 0;
    return square_table(p).sqrt_of[static_cast<std::size_t>(a.residue())] >= 0 ? 1 : -1;
}

std::optional<Scalar> sqrt_mod(const Scalar& a) {
    int p = a.field().p();
    int root = square_table(p).sqrt_of[static_cast<std::size_t>(a.residue())];
    if (root < 0) return std::nullopt;
    return Scalar::of_int(a.field(), root);
}

int p_mod4_class(const Field& f) { return f.p() % 4; }

std::optional<Scalar> exact_sqrt(const Scalar& a) {
    if (a.field().is_prime_field()) return sqrt_mod(a);
    const BigRational& q = a.rational();
    if (q < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Scalar::of_fraction(a.field(), rn, rd);
}

} // namespace rbjordan
