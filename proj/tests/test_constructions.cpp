#include <doctest.h>

#include "rbjordan/constructions.hpp"
#include "rbjordan/operator_io.hpp"

using namespace rbjordan;

namespace {

CliffordAlgebra make_zp(int p, const char* form) {
    Field f = Field::prime(p);
    return CliffordAlgebra(f, BilinearForm::parse(f, form));
}

CliffordAlgebra make_q(const char* form) {
    Field f = Field::rationals();
    return CliffordAlgebra(f, BilinearForm::parse(f, form));
}

Scalar sc(const CliffordAlgebra& a, long long v) { return Scalar::of_int(a.field(), v); }

} // namespace

TEST_CASE("J_3 family members verify and square to zero") {
    CliffordAlgebra q11 = make_q("1,1");
    LinOperator R = build_j3(q11, J3FamilyParams{sc(q11, 1), sc(q11, 1), sc(q11, 0),
                                                 sc(q11, 0), sc(q11, 1)});
    CHECK_FALSE(R.M.is_zero());
    RBReport rep = check_rb(R);
    CHECK(rep.is_rb);
    CHECK(*rep.nilpotency == 2);

    LinOperator Z = build_j3(q11, J3FamilyParams{sc(q11, 1), sc(q11, 1), sc(q11, 0),
                                                 sc(q11, 0), sc(q11, 0)});
    CHECK(Z.M.is_zero());

    CliffordAlgebra z5 = make_zp(5, "1,1");
    LinOperator S = build_j3(z5, J3FamilyParams{sc(z5, 0), sc(z5, 1), sc(z5, 2),
                                                sc(z5, 3), sc(z5, 1)});
    CHECK(check_rb(S).is_rb);
    CHECK(S.M.mul(S.M).is_zero());
}

TEST_CASE("J_3 family rejects parameters off the constraint variety") {
    CliffordAlgebra z5 = make_zp(5, "1,1");
    // a^2 - b^2 - c^2 = 1 - 1 - 1 != 0
    CHECK_THROWS_AS(build_j3(z5, J3FamilyParams{sc(z5, 1), sc(z5, 1), sc(z5, 1),
                                                sc(z5, 0), sc(z5, 0)}),
                    ConstraintViolated);
    // k b + l c = 1 != 0
    CHECK_THROWS_AS(build_j3(z5, J3FamilyParams{sc(z5, 1), sc(z5, 1), sc(z5, 0),
                                                sc(z5, 1), sc(z5, 1)}),
                    ConstraintViolated);
    CliffordAlgebra z53 = make_zp(5, "1,1,1");
    CHECK_THROWS_AS(build_j3(z53, J3FamilyParams{sc(z53, 0), sc(z53, 0), sc(z53, 0),
                                                 sc(z53, 0), sc(z53, 0)}),
                    ConstraintViolated);
    Field z7 = Field::prime(7);
    CHECK_THROWS_AS(build_j3(z5, J3FamilyParams{Scalar::zero(z7), sc(z5, 0), sc(z5, 0),
                                                sc(z5, 0), sc(z5, 0)}),
                    MixedFields);
}

TEST_CASE("J_3 parameters are found whenever the cone has a point") {
    for (int p : {3, 5, 7}) {
        for (int d1 = 1; d1 < p; ++d1) {
            for (int d2 = 1; d2 < p; ++d2) {
                Field f = Field::prime(p);
                CliffordAlgebra a(f, BilinearForm({Scalar::of_int(f, d1), Scalar::of_int(f, d2)}));
                auto params = solve_j3_params(a);
                REQUIRE_MESSAGE(params.has_value(), "p=", p, " d=(", d1, ",", d2, ")");
                LinOperator R = build_j3(a, *params);
                CHECK_FALSE(R.M.is_zero());
                CHECK(check_rb(R).is_rb);
                CHECK(R.M.mul(R.M).is_zero());
            }
        }
    }
}

TEST_CASE("J_3 parameter search over Q") {
    CliffordAlgebra q11 = make_q("1,1");
    auto params = solve_j3_params(q11);
    REQUIRE(params.has_value());
    // first shell hit of x^2 - y^2 - z^2: (1, 0, 1); the tie rule then fixes
    // k = 1 on the b-free slot
    CHECK(params->a == sc(q11, 1));
    CHECK(params->b == sc(q11, 0));
    CHECK(params->c == sc(q11, 1));
    CHECK(params->k == sc(q11, 1));
    CHECK(params->l == sc(q11, 0));
    CHECK(check_rb(build_j3(q11, *params)).is_rb);

    CHECK_FALSE(solve_j3_params(make_q("-1,-1")).has_value());

    auto mixed = solve_j3_params(make_q("1,-1"));
    REQUIRE(mixed.has_value());
    CliffordAlgebra qm = make_q("1,-1");
    CHECK(check_rb(build_j3(qm, *mixed)).is_rb);
}

TEST_CASE("split family members verify with a nonzero square") {
    CliffordAlgebra z5 = make_zp(5, "1,1,1,1");
    LinOperator R = build_split(z5, SplitParams{1, {sc(z5, 1)}, {sc(z5, 1), sc(z5, 2), sc(z5, 0)}});
    LinOperator expected = parse_operator(
        "field Zp:5\n"
        "form 1,1,1,1\n"
        "0,0,4,3,0\n"
        "0,0,4,3,0\n"
        "1,1,0,0,0\n"
        "2,2,0,0,0\n"
        "0,0,0,0,0\n");
    CHECK(R == expected);
    RBReport rep = check_rb(R);
    CHECK(rep.is_rb);
    CHECK(*rep.nilpotency == 3);

    CliffordAlgebra q = make_q("1,1,-1");
    LinOperator S = build_split(q, SplitParams{1, {sc(q, 1)}, {sc(q, 1), sc(q, 1)}});
    RBReport srep = check_rb(S);
    CHECK(srep.is_rb);
    CHECK(*srep.nilpotency == 3);
}

TEST_CASE("split family rejects broken weights") {
    CliffordAlgebra z5 = make_zp(5, "1,1,1,1");
    // all tail weights zero
    CHECK_THROWS_AS(build_split(z5, SplitParams{2, {sc(z5, 0), sc(z5, 1)},
                                                {sc(z5, 0), sc(z5, 0)}}),
                    ConstraintViolated);
    // head does not sum to 1
    CHECK_THROWS_AS(build_split(z5, SplitParams{1, {sc(z5, 2)}, {sc(z5, 1), sc(z5, 2), sc(z5, 0)}}),
                    ConstraintViolated);
    // tail does not sum to 0
    CHECK_THROWS_AS(build_split(z5, SplitParams{1, {sc(z5, 1)}, {sc(z5, 1), sc(z5, 1), sc(z5, 1)}}),
                    ConstraintViolated);
    // split out of range / weight counts off
    CHECK_THROWS_AS(build_split(z5, SplitParams{0, {}, {sc(z5, 1), sc(z5, 2), sc(z5, 0)}}),
                    ConstraintViolated);
    CHECK_THROWS_AS(build_split(z5, SplitParams{4, {sc(z5, 1)}, {}}), ConstraintViolated);
    CHECK_THROWS_AS(build_split(z5, SplitParams{1, {sc(z5, 1), sc(z5, 0)}, {sc(z5, 1), sc(z5, 2)}}),
                    ConstraintViolated);
}

TEST_CASE("split parameters are searched head-first") {
    CliffordAlgebra z5 = make_zp(5, "1,1,1");
    auto params = solve_split_params(z5);
    REQUIRE(params.has_value());
    CHECK(params->split == 1);
    CHECK(params->l == std::vector<Scalar>{sc(z5, 1)});
    CHECK(params->k == std::vector<Scalar>{sc(z5, 1), sc(z5, 2)});
    CHECK(*check_rb(build_split(z5, *params)).nilpotency == 3);

    // all-nonresidue entries with p = 3 mod 4: no head represents 1 with an
    // isotropic tail, at any split
    CHECK_FALSE(solve_split_params(make_zp(7, "3,3,3,3")).has_value());

    CliffordAlgebra z7 = make_zp(7, "1,2,3,4,5,6");
    auto wide = solve_split_params(z7);
    REQUIRE(wide.has_value());
    CHECK(wide->split == 1);
    CHECK(wide->k == std::vector<Scalar>{sc(z7, 0), sc(z7, 1), sc(z7, 1), sc(z7, 0), sc(z7, 0)});
    CHECK(*check_rb(build_split(z7, *wide)).nilpotency == 3);

    // n = 2 never splits: the tail would be a single anisotropic entry
    CHECK_FALSE(solve_split_params(make_zp(3, "1,1")).has_value());
    CHECK_FALSE(solve_split_params(make_zp(3, "2,2")).has_value());

    CliffordAlgebra q = make_q("1,1,-1");
    auto rational = solve_split_params(q);
    REQUIRE(rational.has_value());
    CHECK(rational->split == 1);
    CHECK(rational->k == std::vector<Scalar>{sc(q, 1), sc(q, 1)});
    CHECK(check_rb(build_split(q, *rational)).is_rb);
}

TEST_CASE("cyclic family reproduces the pinned reference operator") {
    LinOperator ref = reference_operator();
    CHECK(ref.algebra.field().descriptor() == "Zp:7");
    CHECK(ref.algebra.form().str() == "6,6,6");
    RBReport rep = check_rb(ref);
    CHECK(rep.is_rb);
    CHECK(*rep.nilpotency == 3);

    CliffordAlgebra a = ref.algebra;
    LinOperator built = build_cyclic(a, CyclicParams{sc(a, 1), sc(a, 2), sc(a, 3), sc(a, 1)});
    CHECK(built == ref);
}

TEST_CASE("cyclic family rejects broken parameters") {
    CliffordAlgebra a = make_zp(7, "6,6,6");
    CHECK_THROWS_AS(build_cyclic(a, CyclicParams{sc(a, 0), sc(a, 2), sc(a, 3), sc(a, 1)}),
                    ConstraintViolated); // zero weight
    CHECK_THROWS_AS(build_cyclic(a, CyclicParams{sc(a, 1), sc(a, 1), sc(a, 1), sc(a, 1)}),
                    ConstraintViolated); // sum d_i k_i^2 != 0
    CHECK_THROWS_AS(build_cyclic(a, CyclicParams{sc(a, 1), sc(a, 2), sc(a, 3), sc(a, 2)}),
                    ConstraintViolated); // x_0^2 + d_1 d_2 d_3 != 0
    CliffordAlgebra wide = make_zp(7, "6,6,6,6");
    CHECK_THROWS_AS(build_cyclic(wide, CyclicParams{sc(wide, 1), sc(wide, 2), sc(wide, 3),
                                                    sc(wide, 1)}),
                    ConstraintViolated); // dim V != 3
}

TEST_CASE("cyclic parameters are the lex-first all-nonzero isotropic triple") {
    CliffordAlgebra ref = make_zp(7, "6,6,6");
    auto params = solve_cyclic_params(ref);
    REQUIRE(params.has_value());
    CHECK(params->k1 == sc(ref, 1));
    CHECK(params->k2 == sc(ref, 2));
    CHECK(params->k3 == sc(ref, 3));
    CHECK(params->x0 == sc(ref, 1));
    CHECK(build_cyclic(ref, *params) == reference_operator());

    CliffordAlgebra mixed = make_zp(5, "1,2,3");
    auto m = solve_cyclic_params(mixed);
    REQUIRE(m.has_value());
    CHECK(m->k1 == sc(mixed, 1));
    CHECK(m->k2 == sc(mixed, 1));
    CHECK(m->k3 == sc(mixed, 2));
    CHECK(m->x0 == sc(mixed, 2));
    CHECK(*check_rb(build_cyclic(mixed, *m)).nilpotency == 3);

    // x_0 exists but every isotropic triple has a zero entry
    CHECK_FALSE(solve_cyclic_params(make_zp(5, "1,1,1")).has_value());
    CHECK_FALSE(solve_cyclic_params(make_zp(3, "1,1,2")).has_value());

    CHECK_THROWS_AS(solve_cyclic_params(make_zp(5, "1,1,1,1")), ConstraintViolated);
}

TEST_CASE("sqrt-split members exist exactly when the roots do") {
    CliffordAlgebra z5 = make_zp(5, "1,1,1");
    LinOperator P = build_sqrt_split(z5);
    CHECK(P.column(0) == z5.element(sc(z5, 0), {sc(z5, 0), sc(z5, 1), sc(z5, 2)}));
    CHECK(P.column(2) == z5.element(sc(z5, 4), {sc(z5, 4), sc(z5, 0), sc(z5, 0)}));
    RBReport rep = check_rb(P);
    CHECK(rep.is_rb);
    CHECK(*rep.nilpotency == 3);

    CliffordAlgebra z13 = make_zp(13, "1,1,1");
    CHECK(*check_rb(build_sqrt_split(z13)).nilpotency == 3);

    CHECK_THROWS_AS(build_sqrt_split(make_zp(7, "1,1,1")), MissingRoots); // sqrt(-1)
    CHECK_THROWS_AS(build_sqrt_split(make_zp(7, "2,2,2")), MissingRoots); // sqrt(-1) again
    CHECK_THROWS_AS(build_sqrt_split(make_zp(5, "1,1,2")), MissingRoots); // sqrt(2) mod 5
    CHECK_THROWS_AS(build_sqrt_split(make_q("1,1,1")), MissingRoots);
    CHECK_THROWS_AS(build_sqrt_split(make_zp(5, "1,1,1,1")), ConstraintViolated);
}

TEST_CASE("grid: every valid J_3 parameter set builds a square-zero member") {
    long long built = 0;
    for (int p : {3, 5, 7}) {
        Field f = Field::prime(p);
        std::vector<Scalar> res;
        for (int v = 0; v < p; ++v) res.push_back(Scalar::of_int(f, v));
        for (int d1 = 1; d1 < p; ++d1) {
            for (int d2 = 1; d2 < p; ++d2) {
                CliffordAlgebra a(f, BilinearForm({res[d1], res[d2]}));
                for (int av = 0; av < p; ++av)
                    for (int bv = 0; bv < p; ++bv)
                        for (int cv = 0; cv < p; ++cv) {
                            if ((av * av - d1 * bv * bv - d2 * cv * cv) % p != 0) continue;
                            for (int kv = 0; kv < p; ++kv)
                                for (int lv = 0; lv < p; ++lv) {
                                    if ((kv * bv + lv * cv) % p != 0) continue;
                                    LinOperator R = build_j3(
                                        a, J3FamilyParams{res[av], res[bv], res[cv],
                                                          res[kv], res[lv]});
                                    REQUIRE(check_rb(R).is_rb);
                                    REQUIRE(R.M.mul(R.M).is_zero());
                                    ++built;
                                }
                        }
            }
        }
    }
    CHECK(built > 5000); // the grid is far from vacuous
}

TEST_CASE("grid: solved split and cyclic parameters verify everywhere") {
    long long split_found = 0;
    long long cyclic_found = 0;
    for (int p : {3, 5}) {
        Field f = Field::prime(p);
        for (int n : {3, 4}) {
            std::vector<int> d(static_cast<std::size_t>(n), 1);
            while (true) {
                std::vector<Scalar> coeffs;
                for (int di : d) coeffs.push_back(Scalar::of_int(f, di));
                CliffordAlgebra a(f, BilinearForm(coeffs));

                if (auto sp = solve_split_params(a)) {
                    // every nonzero rescaling of the tail is also valid
                    for (int t = 1; t < p; ++t) {
                        SplitParams scaled = *sp;
                        for (Scalar& kj : scaled.k) kj = Scalar::of_int(f, t) * kj;
                        LinOperator R = build_split(a, scaled);
                        RBReport rep = check_rb(R);
                        REQUIRE(rep.is_rb);
                        REQUIRE(*rep.nilpotency == 3);
                        REQUIRE(rep.structure.all_ok());
                        REQUIRE(rep.structure.r1_isotropic == Flag::Pass);
                        REQUIRE(rep.structure.column_pair_relations == Flag::Pass);
                        REQUIRE(rep.structure.column_self_relations == Flag::Pass);
                    }
                    ++split_found;
                }
                if (n == 3) {
                    if (auto cp = solve_cyclic_params(a)) {
                        RBReport rep = check_rb(build_cyclic(a, *cp));
                        REQUIRE(rep.is_rb);
                        REQUIRE(*rep.nilpotency == 3);
                        REQUIRE(rep.structure.all_ok());
                        REQUIRE(rep.structure.r1_absorbs_columns == Flag::Pass);
                        REQUIRE(rep.structure.second_iterate_collapses == Flag::Pass);
                        ++cyclic_found;
                    }
                }

                // odometer over (Z_p^*)^n
                int pos = 0;
                while (pos < n && d[pos] == p - 1) {
                    d[pos] = 1;
                    ++pos;
                }
                if (pos == n) break;
                ++d[pos];
            }
        }
    }
    CHECK(split_found > 50);
    CHECK(cyclic_found > 10);
}
