#pragma once

#include <optional>

#include "rbjordan/rbop.hpp"

namespace rbjordan {

/// Parameters of the square-zero operator family on J_3(f). With
/// w = a.1 + b e_1 + c e_2 the operator acts by
///
///   R(1) = 0,  R(e_1) = k w,  R(e_2) = l w,
///
/// subject to a^2 - d_1 b^2 - d_2 c^2 = 0 and k b + l c = 0. Over any field
/// this family exhausts the weight-0 RB-operators on J_3(f), so its members
/// are the classification target for the census on n = 2.
struct J3FamilyParams {
    Scalar a, b, c;
    Scalar k, l;
};

/// Parameters of the split-support family on J_{n+1}(f). The basis of V is
/// cut into a head e_1..e_p and a tail e_{p+1}..e_n, and
///
///   R(1)   = sum_{j>p} k_j e_j,
///   R(e_i) = d_i l_i R(1)                       for i <= p,
///   R(e_j) = -d_j k_j (1 + sum_{i<=p} l_i e_i)  for j > p,
///
/// subject to sum_{i<=p} d_i l_i^2 = 1, sum_{j>p} d_j k_j^2 = 0, and some
/// k_j != 0. Every member satisfies R^2 != 0 and R^3 = 0.
struct SplitParams {
    std::size_t split;     // p, the head length; 1 <= p < n
    std::vector<Scalar> l; // head weights l_1..l_p
    std::vector<Scalar> k; // tail weights k_{p+1}..k_n
};

/// Parameters of the cyclic family on J_4(f): an isotropic triple
/// (k_1, k_2, k_3) with every entry nonzero, plus x_0 solving
/// x_0^2 + d_1 d_2 d_3 = 0. The operator sends
///
///   1   |-> k_1 e_1 + k_2 e_2 + k_3 e_3,
///   e_1 |-> -d_1 k_1 + (k_3 x_0 / d_2) e_2 - (k_2 x_0 / d_3) e_3,
///
/// and cyclically for e_2, e_3. Every member satisfies R^2 != 0 and R^3 = 0.
struct CyclicParams {
    Scalar k1, k2, k3;
    Scalar x0;
};

/// Builds the J_3 family member for explicit parameters.
/// Throws ConstraintViolated when n != 2 or a parameter constraint fails.
LinOperator build_j3(const CliffordAlgebra& algebra, const J3FamilyParams& params);

/// Finds parameters for a nonzero J_3 family member, deterministically:
/// (a, b, c) is the least nonzero vector of x^2 - d_1 y^2 - d_2 z^2 found by
/// isotropic_vector, and (k, l) resolves k b + l c = 0 by l = 1, k = -c/b
/// when b != 0, otherwise k = 1, l = -b/c. Empty when the solver finds no
/// vector (over Q this can mean Absent or merely Undecided).
std::optional<J3FamilyParams> solve_j3_params(const CliffordAlgebra& algebra);

/// Builds the split-family member for explicit parameters.
/// Throws ConstraintViolated on any violated constraint.
LinOperator build_split(const CliffordAlgebra& algebra, const SplitParams& params);

/// Finds split-family parameters by trying head lengths p = 1, 2, ... in
/// order, solving sum_{i<=p} d_i l_i^2 = 1 with unit_representation and the
/// tail isotropy with isotropic_vector. Empty when no head length works
/// (over Q, "no split was decided within the bounded searches").
std::optional<SplitParams> solve_split_params(const CliffordAlgebra& algebra);

/// Builds the cyclic-family member for explicit parameters.
/// Throws ConstraintViolated when n != 3 or a constraint fails.
LinOperator build_cyclic(const CliffordAlgebra& algebra, const CyclicParams& params);

/// Finds cyclic-family parameters: x_0 from exact_sqrt(-d_1 d_2 d_3), and
/// over Z_p the lexicographically first all-nonzero isotropic triple with
/// k_1 = 1 (solutions scale, so fixing k_1 loses nothing). Over Q the
/// isotropic_vector result is used only when all its entries are nonzero.
/// Empty when either ingredient is missing.
std::optional<CyclicParams> solve_cyclic_params(const CliffordAlgebra& algebra);

/// The split-family member on J_4(f) with parameters built from square
/// roots: l_1 = 1/sqrt(d_1), k_2 = 1/sqrt(d_2), k_3 = i/sqrt(d_3) where
/// i^2 = -1. Exists over any field containing all four roots, in
/// particular over every algebraically closed field, which is what makes it
/// the generic witness for nilpotency index 3 on J_4.
/// Throws MissingRoots naming the first absent root, ConstraintViolated
/// when n != 3.
LinOperator build_sqrt_split(const CliffordAlgebra& algebra);

/// A fixed weight-0 RB-operator on J_4(f), f = (6,6,6) over Z_7, with
/// R(1) = e_1 + 2 e_2 + 3 e_3 and nilpotency index 3. Its nine vector-part
/// entries are pinned as literals so it can serve as an end-to-end fixture;
/// build_cyclic with k = (1,2,3), x_0 = 1 must reproduce it exactly.
LinOperator reference_operator();

/// Exact membership test for the J_3 family: R(1) = 0, both remaining
/// columns proportional to one common vector (a, b, c) with
/// a^2 - d_1 b^2 - d_2 c^2 = 0, and the proportionality factors (k, l)
/// satisfying k b + l c = 0. Parameters are scale-redundant, so the test
/// normalizes k = 1 when R(e_1) != 0. False for n != 2. Together with the
/// searches this certifies that the family exhausts all weight-0
/// RB-operators on J_3.
bool in_j3_family(const LinOperator& R);

} // namespace rbjordan
