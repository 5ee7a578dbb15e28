#include "rbjordan/constructions.hpp"

#include "rbjordan/quadform.hpp"

namespace rbjordan {
namespace {

void require_field(const CliffordAlgebra& algebra, std::initializer_list<const Scalar*> params) {
    for (const Scalar* s : params) {
        if (!(s->field() == algebra.field())) {
            throw MixedFields("parameter field differs from the algebra's");
        }
    }
}

// Builders re-verify their own output; a failure here is a bug in the
// formulas, not in the caller's parameters.
void require_built(const LinOperator& R, bool square_zero) {
    if (!check_rb(R).is_rb) {
        throw Error("internal: constructed operator failed verification");
    }
    if (R.M.mul(R.M).is_zero() != square_zero) {
        throw Error("internal: constructed operator has the wrong square");
    }
}

} // namespace

LinOperator build_j3(const CliffordAlgebra& algebra, const J3FamilyParams& params) {
    if (algebra.n() != 2) {
        throw ConstraintViolated("the J_3 family lives on algebras with dim V = 2");
    }
    require_field(algebra, {&params.a, &params.b, &params.c, &params.k, &params.l});
    const Scalar& d1 = algebra.form().d(0);
    const Scalar& d2 = algebra.form().d(1);
    if (!(params.a * params.a - d1 * params.b * params.b - d2 * params.c * params.c).is_zero()) {
        throw ConstraintViolated("a^2 - d_1 b^2 - d_2 c^2 must vanish");
    }
    if (!(params.k * params.b + params.l * params.c).is_zero()) {
        throw ConstraintViolated("k b + l c must vanish");
    }

    AlgebraElement w = algebra.element(params.a, {params.b, params.c});
    LinOperator R = LinOperator::zero(algebra);
    R.set_column(1, params.k * w);
    R.set_column(2, params.l * w);
    require_built(R, /*square_zero=*/true);
    return R;
}

std::optional<J3FamilyParams> solve_j3_params(const CliffordAlgebra& algebra) {
    if (algebra.n() != 2) {
        throw ConstraintViolated("solve_j3_params needs dim V = 2");
    }
    const Field& f = algebra.field();
    Scalar one = Scalar::one(f);
    DiagonalForm cone(f, {one, -algebra.form().d(0), -algebra.form().d(1)});
    SolveResult sol = isotropic_vector(cone);
    if (!sol.found()) return std::nullopt;
    const Scalar& a = sol.point[0];
    const Scalar& b = sol.point[1];
    const Scalar& c = sol.point[2];
    // Resolve k b + l c = 0 with a fixed unit on the unconstrained slot.
    if (!b.is_zero()) {
        return J3FamilyParams{a, b, c, -(c / b), one};
    }
    return J3FamilyParams{a, b, c, one, -(b / c)};
}

LinOperator build_split(const CliffordAlgebra& algebra, const SplitParams& params) {
    const std::size_t n = algebra.n();
    const std::size_t p = params.split;
    if (p < 1 || p >= n) {
        throw ConstraintViolated("the split must satisfy 1 <= p < n");
    }
    if (params.l.size() != p || params.k.size() != n - p) {
        throw ConstraintViolated("weight counts must match the split");
    }
    for (const Scalar& s : params.l) require_field(algebra, {&s});
    for (const Scalar& s : params.k) require_field(algebra, {&s});

    const Field& f = algebra.field();
    Scalar head_sum = Scalar::zero(f);
    for (std::size_t i = 0; i < p; ++i) {
        head_sum = head_sum + algebra.form().d(i) * params.l[i] * params.l[i];
    }
    if (!head_sum.is_one()) {
        throw ConstraintViolated("head weights must satisfy sum d_i l_i^2 = 1");
    }
    Scalar tail_sum = Scalar::zero(f);
    bool some_k = false;
    for (std::size_t t = 0; t < n - p; ++t) {
        tail_sum = tail_sum + algebra.form().d(p + t) * params.k[t] * params.k[t];
        some_k = some_k || !params.k[t].is_zero();
    }
    if (!tail_sum.is_zero()) {
        throw ConstraintViolated("tail weights must satisfy sum d_j k_j^2 = 0");
    }
    if (!some_k) {
        throw ConstraintViolated("some tail weight k_j must be nonzero");
    }

    // r1 = sum_{j>p} k_j e_j and u = 1 + sum_{i<=p} l_i e_i.
    std::vector<Scalar> r1v(n, Scalar::zero(f));
    for (std::size_t t = 0; t < n - p; ++t) r1v[p + t] = params.k[t];
    AlgebraElement r1 = algebra.element(Scalar::zero(f), std::move(r1v));
    std::vector<Scalar> uv(n, Scalar::zero(f));
    for (std::size_t i = 0; i < p; ++i) uv[i] = params.l[i];
    AlgebraElement u = algebra.element(Scalar::one(f), std::move(uv));

    LinOperator R = LinOperator::zero(algebra);
    R.set_column(0, r1);
    for (std::size_t i = 1; i <= p; ++i) {
        R.set_column(i, (algebra.form().d(i - 1) * params.l[i - 1]) * r1);
    }
    for (std::size_t j = p + 1; j <= n; ++j) {
        R.set_column(j, (-(algebra.form().d(j - 1) * params.k[j - 1 - p])) * u);
    }
    require_built(R, /*square_zero=*/false);
    return R;
}

std::optional<SplitParams> solve_split_params(const CliffordAlgebra& algebra) {
    const std::size_t n = algebra.n();
    const std::vector<Scalar>& d = algebra.form().coeffs();
    for (std::size_t p = 1; p + 1 <= n; ++p) {
        DiagonalForm head(algebra.field(), std::vector<Scalar>(d.begin(), d.begin() + p));
        SolveResult unit = unit_representation(head);
        if (!unit.found()) continue;
        DiagonalForm tail(algebra.field(), std::vector<Scalar>(d.begin() + p, d.end()));
        SolveResult iso = isotropic_vector(tail);
        if (!iso.found()) continue;
        return SplitParams{p, unit.point, iso.point};
    }
    return std::nullopt;
}

LinOperator build_cyclic(const CliffordAlgebra& algebra, const CyclicParams& params) {
    if (algebra.n() != 3) {
        throw ConstraintViolated("the cyclic family lives on algebras with dim V = 3");
    }
    require_field(algebra, {&params.k1, &params.k2, &params.k3, &params.x0});
    const Scalar& d1 = algebra.form().d(0);
    const Scalar& d2 = algebra.form().d(1);
    const Scalar& d3 = algebra.form().d(2);
    const Scalar& k1 = params.k1;
    const Scalar& k2 = params.k2;
    const Scalar& k3 = params.k3;
    const Scalar& x0 = params.x0;
    if (k1.is_zero() || k2.is_zero() || k3.is_zero()) {
        throw ConstraintViolated("cyclic weights must all be nonzero");
    }
    if (!(d1 * k1 * k1 + d2 * k2 * k2 + d3 * k3 * k3).is_zero()) {
        throw ConstraintViolated("cyclic weights must satisfy sum d_i k_i^2 = 0");
    }
    if (!(x0 * x0 + d1 * d2 * d3).is_zero()) {
        throw ConstraintViolated("x_0 must satisfy x_0^2 + d_1 d_2 d_3 = 0");
    }

    const Field& f = algebra.field();
    Scalar zero = Scalar::zero(f);
    LinOperator R = LinOperator::zero(algebra);
    R.set_column(0, algebra.element(zero, {k1, k2, k3}));
    R.set_column(1, algebra.element(-(d1 * k1), {zero, k3 * x0 / d2, -(k2 * x0 / d3)}));
    R.set_column(2, algebra.element(-(d2 * k2), {-(k3 * x0 / d1), zero, k1 * x0 / d3}));
    R.set_column(3, algebra.element(-(d3 * k3), {k2 * x0 / d1, -(k1 * x0 / d2), zero}));
    require_built(R, /*square_zero=*/false);
    return R;
}

std::optional<CyclicParams> solve_cyclic_params(const CliffordAlgebra& algebra) {
    if (algebra.n() != 3) {
        throw ConstraintViolated("solve_cyclic_params needs dim V = 3");
    }
    const Field& f = algebra.field();
    const Scalar& d1 = algebra.form().d(0);
    const Scalar& d2 = algebra.form().d(1);
    const Scalar& d3 = algebra.form().d(2);
    std::optional<Scalar> x0 = exact_sqrt(-(d1 * d2 * d3));
    if (!x0) return std::nullopt;

    if (f.is_prime_field()) {
        Scalar one = Scalar::one(f);
        for (long long b = 1; b < f.p(); ++b) {
            for (long long c = 1; c < f.p(); ++c) {
                Scalar k2 = Scalar::of_int(f, b);
                Scalar k3 = Scalar::of_int(f, c);
                if ((d1 + d2 * k2 * k2 + d3 * k3 * k3).is_zero()) {
                    return CyclicParams{one, k2, k3, *x0};
                }
            }
        }
        return std::nullopt;
    }
    SolveResult iso = isotropic_vector(algebra.form().diagonal());
    if (!iso.found()) return std::nullopt;
    for (const Scalar& ki : iso.point) {
        if (ki.is_zero()) return std::nullopt;
    }
    return CyclicParams{iso.point[0], iso.point[1], iso.point[2], *x0};
}

LinOperator build_sqrt_split(const CliffordAlgebra& algebra) {
    if (algebra.n() != 3) {
        throw ConstraintViolated("build_sqrt_split needs dim V = 3");
    }
    const Field& f = algebra.field();
    std::vector<Scalar> roots;
    for (std::size_t i = 0; i < 3; ++i) {
        auto r = exact_sqrt(algebra.form().d(i));
        if (!r) {
            throw MissingRoots("sqrt(d_" + std::to_string(i + 1) + ") does not exist in " +
                               f.descriptor());
        }
        roots.push_back(*r);
    }
    auto i_unit = exact_sqrt(-Scalar::one(f));
    if (!i_unit) {
        throw MissingRoots("sqrt(-1) does not exist in " + f.descriptor());
    }
    SplitParams params{1,
                       {roots[0].inverse()},
                       {roots[1].inverse(), *i_unit * roots[2].inverse()}};
    return build_split(algebra, params);
}

bool in_j3_family(const LinOperator& R) {
    const CliffordAlgebra& algebra = R.algebra;
    if (algebra.n() != 2) return false;
    if (!R.column(0).is_zero()) return false;
    AlgebraElement c1 = R.column(1);
    AlgebraElement c2 = R.column(2);
    if (c1.is_zero() && c2.is_zero()) return true;
    auto norm_vanishes = [&](const AlgebraElement& w) {
        Scalar n = w.alpha * w.alpha - algebra.form().d(0) * w.v[0] * w.v[0] -
                   algebra.form().d(1) * w.v[1] * w.v[1];
        return n.is_zero();
    };
    if (c1.is_zero()) {
        // R(e_1) = k w = 0 with w = R(e_2) != 0 forces k = 0, and the tie
        // constraint k b + l c = 0 degenerates to c = 0.
        return norm_vanishes(c2) && c2.v[1].is_zero();
    }
    if (!norm_vanishes(c1)) return false;
    // Normalize k = 1, w = R(e_1); then R(e_2) must be l w with b + l c = 0.
    const Scalar coords1[3] = {c1.alpha, c1.v[0], c1.v[1]};
    const Scalar coords2[3] = {c2.alpha, c2.v[0], c2.v[1]};
    Scalar l = Scalar::zero(algebra.field());
    for (int i = 0; i < 3; ++i) {
        if (!coords1[i].is_zero()) {
            l = coords2[i] / coords1[i];
            break;
        }
    }
    if (!(l * c1 == c2)) return false;
    return (c1.v[0] + l * c1.v[1]).is_zero();
}

LinOperator reference_operator() {
    Field z7 = Field::prime(7);
    CliffordAlgebra algebra(z7, BilinearForm::parse(z7, "6,6,6"));
    const int entries[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 5},
        {2, 4, 0, 1},
        {3, 2, 6, 0},
    };
    LinOperator R = LinOperator::zero(algebra);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            R.M.at(r, c) = Scalar::of_int(z7, entries[r][c]);
        }
    }
    return R;
}

} // namespace rbjordan
