#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rbjordan/jordan.hpp"
#include "rbjordan/matrix.hpp"

namespace rbjordan {

/// Linear operator on J_{n+1}(f), stored densely; column j of M holds the
/// coordinates of R(b_j) in the basis (1, e_1, ..., e_n).
struct LinOperator {
    CliffordAlgebra algebra;
    ScalarMatrix M;

    LinOperator(CliffordAlgebra a, ScalarMatrix m);
    static LinOperator zero(const CliffordAlgebra& a);

    AlgebraElement column(std::size_t j) const;
    void set_column(std::size_t j, const AlgebraElement& x);

    bool operator==(const LinOperator& rhs) const;
};

AlgebraElement apply(const LinOperator& R, const AlgebraElement& x);

enum class Flag { Pass, Fail, NotApplicable };

/// Structural facts about weight-0 RB-operators, evaluated as data (a failed
/// flag on a verified operator is a bug somewhere; on a non-verified operator
/// it is merely informative). The r1_*/column_* flags describe the shape an
/// operator with R(1) != 0 must have and are NotApplicable when R(1) = 0.
struct StructureFlags {
    Flag unit_avoids_image = Flag::NotApplicable; // 1 is not in the image
    Flag kernel_at_least_two = Flag::NotApplicable; // kernel dimension >= 2
    Flag scalar_r1_collapses = Flag::NotApplicable; // R(1) in F.1 forces R(1) = 0 and R^2 = 0
    Flag r1_square_identity = Flag::NotApplicable; // R(1)R(1) = 2 R^2(1)
    Flag r1_isotropic = Flag::NotApplicable; // R(1) isotropic with zero scalar part, R^2(1) = 0
    Flag r1_absorbs_columns = Flag::NotApplicable; // R(1)R(e_i) = a0 R(1); (R(1), R(e_i) - a0) = 0
    Flag second_iterate_collapses = Flag::NotApplicable; // R^2(e_i) = (a0 - d_i k_i) R(1)
    Flag column_pair_relations = Flag::NotApplicable; // pair products, pairings, d_j a_j + d_i b_i = 0
    Flag column_self_relations = Flag::NotApplicable; // a_i = 0 and (R(e_i) - a0, R(e_i) - a0) = a0^2
    Flag rescaled_skew = Flag::NotApplicable; // rescaled lower nxn block skew-symmetric

    bool all_ok() const;
};

struct FailingPair {
    std::size_t i;
    std::size_t j;
    AlgebraElement residual; // R(b_i)R(b_j) - R(R(b_i) b_j + b_i R(b_j) + w b_i b_j)
};

struct RBReport {
    bool is_rb = false;
    Scalar weight;
    std::vector<FailingPair> failing_pairs;
    std::optional<unsigned> nilpotency; // smallest s with R^s = 0, up to n + 2
    StructureFlags structure;
};

/// Tests R(x)R(y) = R(R(x)y + xR(y) + w xy) on all ordered basis pairs
/// (bilinearity makes that sufficient) and bundles the nilpotency index and
/// the diagnostic flags. Identity failures are data, not errors.
RBReport check_rb(const LinOperator& R, const Scalar& weight);
/// Weight-0 check, the scope of every classification here.
RBReport check_rb(const LinOperator& R);

/// Smallest s >= 1 with R^s = 0, probed up to s = n + 2; empty means R is
/// not nilpotent. The zero operator has index 1.
std::optional<unsigned> nilpotency_index(const LinOperator& R);

/// Evaluates every structural flag; never throws on failures.
StructureFlags structure_diagnostics(const LinOperator& R);

/// Skew-symmetry of the lower n x n block after rescaling e_i' = e_i/sqrt(d_i).
/// NotApplicable when R^2 = 0 or some sqrt(d_i) is missing from the field.
Flag check_rescaled_skew(const LinOperator& R);

/// Lifts a weight-0 RB-operator P on the subalgebra spanned by 1 and
/// {e_i : i in split} to the full algebra by R(b + c) = P(b). The split lists
/// strictly increasing 1-based e-indices and must match P's form entry-wise.
/// The containment hypothesis (products of the subalgebra with its complement
/// land in ker P + complement) is verified directly, not assumed.
LinOperator extend_by_zero(const LinOperator& P, const CliffordAlgebra& algebra,
                           const std::vector<std::size_t>& split);

/// Transports R along the basis relabeling e_t -> e_{image[t-1]} (image is a
/// bijection of {1..n}; the unit stays put). The target form must agree with
/// the source form under the relabeling.
LinOperator permute_basis(const LinOperator& R, const CliffordAlgebra& target,
                          const std::vector<std::size_t>& image);

} // namespace rbjordan
