#include "rbjordan/quadform.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace rbjordan {
namespace {

std::vector<std::string_view> split_csv(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

// cpp_rational's two-argument constructor requires den > 0.
BigRational make_ratio(const BigInt& num, const BigInt& den) {
    return den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
    if (q < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return BigRational(rn, rd);
}

void require_solvable_field(const Field& f, const char* op) {
    if (!f.supports_arithmetic()) {
        throw UnsupportedField(std::string(op) + " requires Zp or Q, have " + f.descriptor());
    }
}

// Lexicographically least (x_1..x_k) over Z_p with sum d_i x_i^2 = t,
// skipping the zero vector when require_nonzero. The last coordinate is
// derived through the square table, whose root in [0, p/2] is exactly the
// lexicographic minimum of the two candidates.
std::optional<std::vector<Scalar>> lex_solve_mod(const std::vector<Scalar>& d, const Scalar& t,
                                                 bool require_nonzero) {
    const Field& f = t.field();
    int p = f.p();
    std::size_t k = d.size();
    std::vector<Scalar> x(k, Scalar::zero(f));
    std::function<bool(std::size_t, const Scalar&)> fill =
        [&](std::size_t pos, const Scalar& partial) -> bool {
        if (pos + 1 == k) {
            auto root = sqrt_mod((t - partial) / d[pos]);
            if (!root) return false;
            x[pos] = *root;
            if (require_nonzero) {
                bool all_zero = true;
                for (const Scalar& xi : x) all_zero = all_zero && xi.is_zero();
                if (all_zero) return false;
            }
            return true;
        }
        for (int r = 0; r < p; ++r) {
            x[pos] = Scalar::of_int(f, r);
            if (fill(pos + 1, partial + d[pos] * x[pos] * x[pos])) return true;
        }
        return false;
    };
    if (fill(0, Scalar::zero(f))) return x;
    return std::nullopt;
}

// Walks integer prefixes (x_1..x_{k-1}) in shells of growing maximum
// magnitude, each shell in coordinate order 0, 1, -1, 2, -2, ..., and derives
// the rational x_k from sum D_i x_i^2 = T. First exact hit wins.
std::optional<std::vector<BigRational>> shell_solve(const std::vector<BigInt>& D, const BigInt& T,
                                                    unsigned bound, bool require_nonzero) {
    std::size_t k = D.size();
    if (k == 1) {
        auto root = rational_sqrt(make_ratio(T, D[0]));
        if (!root || (require_nonzero && *root == 0)) return std::nullopt;
        return std::vector<BigRational>{*root};
    }
    std::vector<long long> x(k - 1, 0);
    std::optional<std::vector<BigRational>> result;
    auto msign = [](unsigned j) -> long long {
        long long mag = (j + 1) / 2;
        return j % 2 == 1 ? mag : -mag;
    };
    std::function<bool(std::size_t, long long, long long)> fill =
        [&](std::size_t pos, long long shell, long long maxmag) -> bool {
        if (pos == k - 1) {
            if (maxmag != shell) return false; // interior point of an earlier shell
            BigInt s = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) s += D[i] * x[i] * x[i];
            auto root = rational_sqrt(make_ratio(T - s, D[k - 1]));
            if (!root) return false;
            if (require_nonzero && maxmag == 0 && *root == 0) return false;
            std::vector<BigRational> point;
            point.reserve(k);
            for (long long xi : x) point.emplace_back(xi);
            point.push_back(*root);
            result = std::move(point);
            return true;
        }
        for (unsigned j = 0; j <= 2 * static_cast<unsigned>(shell); ++j) {
            long long v = msign(j);
            x[pos] = v;
            if (fill(pos + 1, shell, std::max(maxmag, std::abs(v)))) return true;
        }
        return false;
    };
    for (long long shell = 0; shell <= static_cast<long long>(bound); ++shell) {
        if (fill(0, shell, 0)) return result;
    }
    return std::nullopt;
}

// The form's coefficients scaled to integers by the lcm of denominators;
// scaling preserves the zero set and the signs.
std::vector<BigInt> scaled_coeffs(const DiagonalForm& form, BigInt& scale) {
    scale = 1;
    for (const Scalar& di : form.coeffs()) {
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(di.rational()));
    }
    std::vector<BigInt> D;
    D.reserve(form.size());
    for (const Scalar& di : form.coeffs()) {
        const BigRational& q = di.rational();
        D.push_back(boost::multiprecision::numerator(q) *
                    (scale / boost::multiprecision::denominator(q)));
    }
    return D;
}

std::vector<Scalar> pad_tail(const Field& f, std::vector<Scalar> head, std::size_t m) {
    while (head.size() < m) head.push_back(Scalar::zero(f));
    return head;
}

std::vector<Scalar> to_scalars(const Field& f, const std::vector<BigRational>& values) {
    std::vector<Scalar> out;
    out.reserve(values.size());
    for (const BigRational& v : values) {
        out.push_back(Scalar::of_fraction(f, boost::multiprecision::numerator(v),
                                          boost::multiprecision::denominator(v)));
    }
    return out;
}

bool sign_definite(const DiagonalForm& form) {
    int first = form.d(0).sign();
    for (const Scalar& di : form.coeffs()) {
        if (di.sign() != first) return false;
    }
    return true;
}

} // namespace

DiagonalForm::DiagonalForm(const Field& field, std::vector<Scalar> d)
    : field_(field), d_(std::move(d)) {
    if (d_.empty()) throw ConstraintViolated("a diagonal form needs at least one coefficient");
    for (const Scalar& di : d_) {
        if (!(di.field() == field_)) {
            throw MixedFields("form coefficient from " + di.field().descriptor() +
                              " in a " + field_.descriptor() + " form");
        }
        if (di.is_zero()) throw ConstraintViolated("diagonal forms must be nondegenerate: d_i != 0");
    }
}

DiagonalForm DiagonalForm::parse(const Field& f, std::string_view text) {
    std::vector<Scalar> d;
    for (std::string_view part : split_csv(text)) d.push_back(Scalar::parse(f, part));
    return DiagonalForm(f, std::move(d));
}

DiagonalForm DiagonalForm::prefix(std::size_t m) const {
    return DiagonalForm(field_, std::vector<Scalar>(d_.begin(), d_.begin() + m));
}

Scalar DiagonalForm::evaluate(const std::vector<Scalar>& x) const {
    if (x.size() != d_.size()) {
        throw DimensionMismatch("form of arity " + std::to_string(d_.size()) + " applied to " +
                                std::to_string(x.size()) + " coordinates");
    }
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = 0; i < d_.size(); ++i) acc = acc + d_[i] * x[i] * x[i];
    return acc;
}

std::string DiagonalForm::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i > 0) out << ',';
        out << d_[i].str();
    }
    return out.str();
}

SolveResult isotropic_vector(const DiagonalForm& form, unsigned height_bound) {
    require_solvable_field(form.field(), "isotropic_vector");
    const Field& f = form.field();
    std::size_t m = form.size();

    if (m == 1) return SolveResult::make_absent("d_1 x^2 = 0 forces x = 0");

    if (f.is_prime_field()) {
        // Restricting to the first three coordinates loses nothing: every
        // ternary form over Z_p has a nonzero zero, so m > 3 reduces.
        std::size_t k = std::min<std::size_t>(m, 3);
        std::vector<Scalar> head(form.coeffs().begin(), form.coeffs().begin() + k);
        auto x = lex_solve_mod(head, Scalar::zero(f), /*require_nonzero=*/true);
        if (x) return SolveResult::make_found(pad_tail(f, std::move(*x), m));
        if (m == 2) {
            return SolveResult::make_absent("-d_1/d_2 is a nonresidue, so only the zero vector");
        }
        throw Error("internal: ternary form over Z_p reported anisotropic");
    }

    if (m == 2) {
        auto r = rational_sqrt((-form.d(0) / form.d(1)).rational());
        if (r) {
            return SolveResult::make_found(to_scalars(f, {BigRational(1), *r}));
        }
        return SolveResult::make_absent("-d_1/d_2 is not a rational square");
    }

    if (sign_definite(form)) {
        return SolveResult::make_undecided(
            "sign-definite form: only the zero vector vanishes over Q, but nonexistence "
            "proofs here are scoped to binary forms");
    }

    BigInt scale;
    std::vector<BigInt> D = scaled_coeffs(form, scale);
    std::size_t k = std::min<std::size_t>(m, 3);
    if (!sign_definite(form.prefix(k))) { // a definite head cannot vanish; skip to the pair sweep
        auto x = shell_solve(std::vector<BigInt>(D.begin(), D.begin() + k), BigInt(0),
                             height_bound, /*require_nonzero=*/true);
        if (x) return SolveResult::make_found(pad_tail(f, to_scalars(f, *x), m));
    }

    // With the tail pinned to zero a head search can miss easy two-variable
    // zeros in later coordinates, so sweep the pairs before giving up.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto r = rational_sqrt((-form.d(i) / form.d(j)).rational());
            if (!r) continue;
            std::vector<Scalar> point(m, Scalar::zero(f));
            point[i] = Scalar::one(f);
            point[j] = Scalar::of_fraction(f, boost::multiprecision::numerator(*r),
                                           boost::multiprecision::denominator(*r));
            return SolveResult::make_found(std::move(point));
        }
    }
    return SolveResult::make_undecided("no integer point of height <= " +
                                       std::to_string(height_bound) + " found over Q");
}

std::pair<Scalar, Scalar> represent(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (!a.field().is_prime_field()) {
        throw UnsupportedField("represent solves over Z_p only, have " + a.field().descriptor());
    }
    if (a.is_zero() || b.is_zero() || c.is_zero()) {
        throw ConstraintViolated("represent requires nonzero a, b, c");
    }
    auto x = lex_solve_mod({a, b}, c, /*require_nonzero=*/false);
    if (!x) throw Error("internal: a x^2 + b y^2 = c has a solution over every Z_p");
    return {(*x)[0], (*x)[1]};
}

SolveResult unit_representation(const DiagonalForm& form, unsigned height_bound) {
    require_solvable_field(form.field(), "unit_representation");
    const Field& f = form.field();
    std::size_t m = form.size();

    if (m == 1) {
        auto r = exact_sqrt(form.d(0).inverse());
        if (r) return SolveResult::make_found({*r});
        return SolveResult::make_absent("1/d_1 is not a square in " + f.descriptor());
    }

    if (f.is_prime_field()) {
        auto [x, y] = represent(form.d(0), form.d(1), Scalar::one(f));
        return SolveResult::make_found(pad_tail(f, {x, y}, m));
    }

    bool all_negative = true;
    for (const Scalar& di : form.coeffs()) all_negative = all_negative && di.sign() < 0;
    if (all_negative) {
        return SolveResult::make_undecided(
            "all coefficients negative: the form is nonpositive over Q, but nonexistence "
            "proofs here are scoped to single-variable square tests");
    }

    BigInt scale;
    std::vector<BigInt> D = scaled_coeffs(form, scale);
    std::size_t k = std::min<std::size_t>(m, 3);
    bool head_negative = true;
    for (std::size_t i = 0; i < k; ++i) head_negative = head_negative && D[i] < 0;
    if (!head_negative) { // a nonpositive head cannot reach 1; skip to the single sweep
        auto x = shell_solve(std::vector<BigInt>(D.begin(), D.begin() + k), scale, height_bound,
                             /*require_nonzero=*/false);
        if (x) return SolveResult::make_found(pad_tail(f, to_scalars(f, *x), m));
    }

    for (std::size_t i = 0; i < m; ++i) {
        auto r = exact_sqrt(form.d(i).inverse());
        if (!r) continue;
        std::vector<Scalar> point(m, Scalar::zero(f));
        point[i] = *r;
        return SolveResult::make_found(std::move(point));
    }
    return SolveResult::make_undecided("no integer point of height <= " +
                                       std::to_string(height_bound) + " found over Q");
}

} // namespace rbjordan
