#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbjordan/scalar.hpp"

namespace rbjordan {

/// Diagonal quadratic form d_1 x_1^2 + ... + d_m x_m^2 with every d_i != 0.
class DiagonalForm {
public:
    DiagonalForm(const Field& field, std::vector<Scalar> d);
    /// Comma-separated coefficients, e.g. "1,1,-2".
    static DiagonalForm parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    std::size_t size() const { return d_.size(); }
    const Scalar& d(std::size_t i) const { return d_.at(i); }
    const std::vector<Scalar>& coeffs() const { return d_; }
    DiagonalForm prefix(std::size_t m) const;

    Scalar evaluate(const std::vector<Scalar>& x) const;
    std::string str() const;

private:
    Field field_;
    std::vector<Scalar> d_;
};

enum class SolveStatus {
    Found,     // point satisfies the defining equation exactly
    Absent,    // proved that no solution exists
    Undecided, // bounded search over Q exhausted without a verdict
};

struct SolveResult {
    SolveStatus status;
    std::vector<Scalar> point; // nonempty exactly when status == Found
    std::string note;          // short reason when status != Found

    bool found() const { return status == SolveStatus::Found; }

    static SolveResult make_found(std::vector<Scalar> point) {
        return SolveResult{SolveStatus::Found, std::move(point), ""};
    }
    static SolveResult make_absent(std::string note) {
        return SolveResult{SolveStatus::Absent, {}, std::move(note)};
    }
    static SolveResult make_undecided(std::string note) {
        return SolveResult{SolveStatus::Undecided, {}, std::move(note)};
    }
};

/// Nonzero x with sum d_i x_i^2 = 0.
///
/// Over Z_p the search enumerates points in lexicographic residue order, so
/// the result is the least nonzero solution; forms with more than three
/// variables are reduced to their first three coordinates (zero tail), which
/// always suffices since every ternary form over Z_p is isotropic. Over Q the
/// search walks integer vectors in shells of growing magnitude (coordinate
/// order 0, 1, -1, 2, -2, ...) up to `height_bound`, deriving the last
/// coordinate from the rest; Absent is only ever proved for m <= 2, and
/// sign-definite or exhausted searches report Undecided.
SolveResult isotropic_vector(const DiagonalForm& form, unsigned height_bound = 1000);

/// (x, y) with a x^2 + b y^2 = c over Z_p, all of a, b, c nonzero. Such a
/// pair always exists; the lexicographically least one is returned.
std::pair<Scalar, Scalar> represent(const Scalar& a, const Scalar& b, const Scalar& c);

/// l with sum d_i l_i^2 = 1. For m = 1 this is a square-root test in either
/// field. Over Z_p with m >= 2 a solution always exists and is taken from
/// represent() on the first two coefficients (zero tail). Over Q the same
/// shell search as isotropic_vector runs on the first min(m, 3) coordinates,
/// then single-coordinate square tests; failures report Undecided.
SolveResult unit_representation(const DiagonalForm& form, unsigned height_bound = 1000);

} // namespace rbjordan
