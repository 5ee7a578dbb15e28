#include "rbjordan/rbop.hpp"

#include <algorithm>

namespace rbjordan {
namespace {

std::vector<Scalar> coords(const AlgebraElement& x) {
    std::vector<Scalar> out;
    out.reserve(x.v.size() + 1);
    out.push_back(x.alpha);
    for (const Scalar& vi : x.v) out.push_back(vi);
    return out;
}

AlgebraElement from_coords(const std::vector<Scalar>& c) {
    return AlgebraElement{c.front(), std::vector<Scalar>(c.begin() + 1, c.end())};
}

bool vector_part_zero(const AlgebraElement& x) {
    for (const Scalar& vi : x.v) {
        if (!vi.is_zero()) return false;
    }
    return true;
}

Flag flag_of(bool ok) { return ok ? Flag::Pass : Flag::Fail; }

} // namespace

LinOperator::LinOperator(CliffordAlgebra a, ScalarMatrix m)
    : algebra(std::move(a)), M(std::move(m)) {
    if (M.rows() != algebra.dim() || M.cols() != algebra.dim()) {
        throw DimensionMismatch("operator matrix must be " + std::to_string(algebra.dim()) +
                                "x" + std::to_string(algebra.dim()));
    }
    if (!(M.field() == algebra.field())) {
        throw MixedFields("operator matrix field differs from the algebra's");
    }
}

LinOperator LinOperator::zero(const CliffordAlgebra& a) {
    return LinOperator(a, ScalarMatrix(a.field(), a.dim(), a.dim()));
}

AlgebraElement LinOperator::column(std::size_t j) const {
    std::vector<Scalar> c;
    c.reserve(algebra.dim());
    for (std::size_t r = 0; r < algebra.dim(); ++r) c.push_back(M.at(r, j));
    return from_coords(c);
}

void LinOperator::set_column(std::size_t j, const AlgebraElement& x) {
    std::vector<Scalar> c = coords(x);
    if (c.size() != algebra.dim()) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < algebra.dim(); ++r) M.at(r, j) = c[r];
}

bool LinOperator::operator==(const LinOperator& rhs) const {
    return algebra == rhs.algebra && M == rhs.M;
}

AlgebraElement apply(const LinOperator& R, const AlgebraElement& x) {
    if (x.v.size() != R.algebra.n()) {
        throw DimensionMismatch("element does not live in the operator's algebra");
    }
    return from_coords(R.M.apply(coords(x)));
}

std::optional<unsigned> nilpotency_index(const LinOperator& R) {
    ScalarMatrix power = R.M;
    for (unsigned s = 1; s <= R.algebra.dim() + 1; ++s) {
        if (power.is_zero()) return s;
        power = power.mul(R.M);
    }
    return std::nullopt;
}

Flag check_rescaled_skew(const LinOperator& R) {
    if (R.M.mul(R.M).is_zero()) return Flag::NotApplicable;
    const CliffordAlgebra& a = R.algebra;
    std::vector<Scalar> roots;
    for (std::size_t i = 0; i < a.n(); ++i) {
        auto root = exact_sqrt(a.form().d(i));
        if (!root) return Flag::NotApplicable;
        roots.push_back(*root);
    }
    // In the basis (1, e_1/sqrt(d_1), ..., e_n/sqrt(d_n)) the matrix becomes
    // A'(r, c) = s_r A(r, c) / s_c with s_0 = 1; the claim concerns its lower
    // right n x n block.
    for (std::size_t i = 1; i <= a.n(); ++i) {
        for (std::size_t j = i; j <= a.n(); ++j) {
            Scalar lhs = roots[i - 1] * R.M.at(i, j) / roots[j - 1];
            Scalar rhs = roots[j - 1] * R.M.at(j, i) / roots[i - 1];
            if (!(lhs == -rhs)) return Flag::Fail;
        }
    }
    return Flag::Pass;
}

StructureFlags structure_diagnostics(const LinOperator& R) {
    const CliffordAlgebra& a = R.algebra;
    const Field& f = a.field();
    Scalar two = Scalar::of_int(f, 2);
    StructureFlags out;

    AlgebraElement r1 = R.column(0);
    ScalarMatrix M2 = R.M.mul(R.M);

    out.unit_avoids_image = flag_of(!R.M.solve(coords(a.one())).has_value());
    out.kernel_at_least_two = flag_of(R.M.kernel_dim() >= 2);
    if (vector_part_zero(r1)) {
        // hypothesis "R(1) is a scalar": conclusion R(1) = 0 and R^2 = 0
        // (which is exactly Im R inside ker R)
        out.scalar_r1_collapses = flag_of(r1.is_zero() && M2.is_zero());
    }
    out.r1_square_identity = flag_of(a.product(r1, r1) == two * apply(R, r1));

    if (!r1.is_zero()) {
        out.r1_isotropic = flag_of(r1.alpha.is_zero() && a.product(r1, r1).is_zero() &&
                          apply(R, r1).is_zero() && bilinear(r1.v, r1.v, a.form()).is_zero());

        bool b_ok = true, c_ok = true, d_ok = true, e_ok = true;
        for (std::size_t i = 1; i <= a.n(); ++i) {
            AlgebraElement ri = R.column(i);
            const Scalar& a0 = ri.alpha;
            b_ok = b_ok && a.product(r1, ri) == a0 * r1 &&
                   bilinear(r1.v, ri.v, a.form()).is_zero();
            Scalar ki = r1.v[i - 1];
            c_ok = c_ok && apply(R, ri) == (a0 - a.form().d(i - 1) * ki) * r1;
            e_ok = e_ok && a.product(ri, ri) == (two * a0) * ri &&
                   bilinear(ri.v, ri.v, a.form()) == a0 * a0 && ri.v[i - 1].is_zero();
            for (std::size_t j = 1; j <= a.n(); ++j) {
                if (j == i) continue;
                AlgebraElement rj = R.column(j);
                const Scalar& b0 = rj.alpha;
                d_ok = d_ok && a.product(ri, rj) == a0 * rj + b0 * ri &&
                       bilinear(ri.v, rj.v, a.form()) == a0 * b0 &&
                       (a.form().d(j - 1) * ri.v[j - 1] + a.form().d(i - 1) * rj.v[i - 1])
                           .is_zero();
            }
        }
        out.r1_absorbs_columns = flag_of(b_ok);
        out.second_iterate_collapses = flag_of(c_ok);
        out.column_pair_relations = flag_of(d_ok);
        out.column_self_relations = flag_of(e_ok);
    }

    out.rescaled_skew = check_rescaled_skew(R);
    return out;
}

bool StructureFlags::all_ok() const {
    for (Flag fl : {unit_avoids_image, kernel_at_least_two, scalar_r1_collapses, r1_square_identity, r1_isotropic, r1_absorbs_columns, second_iterate_collapses, column_pair_relations, column_self_relations, rescaled_skew}) {
        if (fl == Flag::Fail) return false;
    }
    return true;
}

RBReport check_rb(const LinOperator& R, const Scalar& weight) {
    const CliffordAlgebra& a = R.algebra;
    RBReport report{false, weight, {}, std::nullopt, {}};

    std::vector<AlgebraElement> image;
    for (std::size_t j = 0; j < a.dim(); ++j) image.push_back(R.column(j));

    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            AlgebraElement x = a.basis(i);
            AlgebraElement y = a.basis(j);
            AlgebraElement lhs = a.product(image[i], image[j]);
            AlgebraElement inner =
                a.product(image[i], y) + a.product(x, image[j]) + weight * a.product(x, y);
            AlgebraElement residual = lhs - apply(R, inner);
            if (!residual.is_zero()) {
                report.failing_pairs.push_back(FailingPair{i, j, std::move(residual)});
            }
        }
    }
    report.is_rb = report.failing_pairs.empty();
    report.nilpotency = nilpotency_index(R);
    report.structure = structure_diagnostics(R);
    return report;
}

RBReport check_rb(const LinOperator& R) { return check_rb(R, Scalar::zero(R.algebra.field())); }

LinOperator extend_by_zero(const LinOperator& P, const CliffordAlgebra& algebra,
                           const std::vector<std::size_t>& split) {
    const CliffordAlgebra& sub = P.algebra;
    if (!(sub.field() == algebra.field())) {
        throw MixedFields("subalgebra and ambient algebra fields differ");
    }
    if (split.size() != sub.n()) {
        throw ConstraintViolated("split lists one e-index per subalgebra coordinate");
    }
    for (std::size_t t = 0; t < split.size(); ++t) {
        if (split[t] < 1 || split[t] > algebra.n() || (t > 0 && split[t] <= split[t - 1])) {
            throw ConstraintViolated("split must be strictly increasing within 1..n");
        }
        if (!(sub.form().d(t) == algebra.form().d(split[t] - 1))) {
            throw ConstraintViolated("subalgebra form does not match the split coordinates");
        }
    }
    if (!check_rb(P).is_rb) {
        throw ConstraintViolated("extend_by_zero needs a weight-0 RB-operator to extend");
    }

    // The lifting hypothesis: products of the subalgebra B with the
    // complementary span C stay inside ker P + C. Checked directly on basis
    // pairs rather than trusted.
    std::vector<std::size_t> complement;
    for (std::size_t j = 1; j <= algebra.n(); ++j) {
        if (std::find(split.begin(), split.end(), j) == split.end()) complement.push_back(j);
    }
    std::vector<std::size_t> b_indices{0};
    b_indices.insert(b_indices.end(), split.begin(), split.end());
    for (std::size_t bi : b_indices) {
        for (std::size_t cj : complement) {
            AlgebraElement z = algebra.product(algebra.basis(bi), algebra.basis(cj));
            std::vector<Scalar> vb;
            for (std::size_t idx : split) vb.push_back(z.v[idx - 1]);
            AlgebraElement z_b = sub.element(z.alpha, std::move(vb));
            if (!apply(P, z_b).is_zero()) {
                throw HypothesisViolated("B*C does not land in ker P + C at basis pair (" +
                                         std::to_string(bi) + "," + std::to_string(cj) + ")");
            }
        }
    }

    LinOperator out = LinOperator::zero(algebra);
    auto embed = [&](const AlgebraElement& x) {
        AlgebraElement full = algebra.zero();
        full.alpha = x.alpha;
        for (std::size_t t = 0; t < split.size(); ++t) full.v[split[t] - 1] = x.v[t];
        return full;
    };
    out.set_column(0, embed(P.column(0)));
    for (std::size_t t = 0; t < split.size(); ++t) {
        out.set_column(split[t], embed(P.column(t + 1)));
    }
    if (!check_rb(out).is_rb) {
        throw Error("internal: zero extension of an RB-operator failed its own check");
    }
    return out;
}

LinOperator permute_basis(const LinOperator& R, const CliffordAlgebra& target,
                          const std::vector<std::size_t>& image) {
    const CliffordAlgebra& src = R.algebra;
    if (!(src.field() == target.field())) throw MixedFields("permute_basis across fields");
    if (image.size() != src.n() || target.n() != src.n()) {
        throw DimensionMismatch("permutation arity mismatch");
    }
    std::vector<bool> seen(src.n() + 1, false);
    for (std::size_t t = 1; t <= src.n(); ++t) {
        std::size_t im = image[t - 1];
        if (im < 1 || im > src.n() || seen[im]) {
            throw ConstraintViolated("image must be a bijection of 1..n");
        }
        seen[im] = true;
        if (!(target.form().d(im - 1) == src.form().d(t - 1))) {
            throw ConstraintViolated("forms do not correspond under the relabeling");
        }
    }
    auto sigma = [&](std::size_t idx) { return idx == 0 ? 0 : image[idx - 1]; };
    LinOperator out = LinOperator::zero(target);
    for (std::size_t r = 0; r < src.dim(); ++r) {
        for (std::size_t c = 0; c < src.dim(); ++c) {
            out.M.at(sigma(r), sigma(c)) = R.M.at(r, c);
        }
    }
    return out;
}

} // namespace rbjordan
