#include <doctest.h>

#include "rbjordan/quadform.hpp"

using namespace rbjordan;

namespace {

DiagonalForm form_of(const Field& f, std::initializer_list<int> ds) {
    std::vector<Scalar> d;
    for (int v : ds) d.push_back(Scalar::of_int(f, v));
    return DiagonalForm(f, std::move(d));
}

void check_solves(const DiagonalForm& form, const SolveResult& r, int target) {
    REQUIRE(r.found());
    REQUIRE(r.point.size() == form.size());
    CHECK(form.evaluate(r.point) == Scalar::of_int(form.field(), target));
}

} // namespace

TEST_CASE("diagonal forms parse, print, and evaluate") {
    Field z5 = Field::prime(5);
    DiagonalForm f = DiagonalForm::parse(z5, "1,1,-2");
    CHECK(f.size() == 3);
    CHECK(f.str() == "1,1,3");
    CHECK(f.evaluate({Scalar::of_int(z5, 1), Scalar::of_int(z5, 2), Scalar::of_int(z5, 0)})
              .residue() == 0);
    CHECK(f.prefix(2).str() == "1,1");

    CHECK_THROWS_AS(DiagonalForm::parse(z5, "1,0,1"), ConstraintViolated);
    CHECK_THROWS_AS(DiagonalForm::parse(z5, ""), ParseError);
    CHECK_THROWS_AS(f.evaluate({Scalar::zero(z5)}), DimensionMismatch);
    CHECK_THROWS_AS(DiagonalForm(z5, {Scalar::one(Field::rationals())}), MixedFields);
    // symbolic coefficients may exist (the index table reads their signs)...
    CHECK(DiagonalForm::parse(Field::reals(), "-1,-1").d(0).sign() == -1);
    // ...but no solver runs on them
    CHECK_THROWS_AS(isotropic_vector(DiagonalForm::parse(Field::reals(), "1,1")),
                    UnsupportedField);
}

TEST_CASE("isotropic vectors over prime fields") {
    Field z5 = Field::prime(5);
    SolveResult r = isotropic_vector(form_of(z5, {1, 1, 1}));
    check_solves(form_of(z5, {1, 1, 1}), r, 0);
    CHECK(r.point[0].residue() == 0); // lexicographically least nonzero zero
    CHECK(r.point[1].residue() == 1);
    CHECK(r.point[2].residue() == 2);

    CHECK(isotropic_vector(form_of(Field::prime(3), {1, 1})).status == SolveStatus::Absent);
    CHECK(isotropic_vector(form_of(Field::prime(3), {1, 2})).found()); // x^2 = y^2 has (1,1)... (0? no)
    CHECK(isotropic_vector(form_of(z5, {1})).status == SolveStatus::Absent);
}

TEST_CASE("ternary forms over Z_p are always isotropic") {
    for (int p : {3, 5, 7}) {
        Field f = Field::prime(p);
        for (int d1 = 1; d1 < p; ++d1) {
            for (int d2 = 1; d2 < p; ++d2) {
                for (int d3 = 1; d3 < p; ++d3) {
                    DiagonalForm form = form_of(f, {d1, d2, d3});
                    SolveResult r = isotropic_vector(form);
                    check_solves(form, r, 0);
                    bool nonzero = false;
                    for (const Scalar& xi : r.point) nonzero = nonzero || !xi.is_zero();
                    CHECK(nonzero);
                }
            }
        }
    }
}

TEST_CASE("binary forms over Z_p follow the -d1*d2 residue criterion") {
    for (int p : {3, 5, 7}) {
        Field f = Field::prime(p);
        for (int d1 = 1; d1 < p; ++d1) {
            for (int d2 = 1; d2 < p; ++d2) {
                DiagonalForm form = form_of(f, {d1, d2});
                SolveResult r = isotropic_vector(form);
                // independent oracle: full enumeration of Z_p^2
                bool any = false;
                for (int x = 0; x < p && !any; ++x) {
                    for (int y = 0; y < p && !any; ++y) {
                        if (x == 0 && y == 0) continue;
                        any = (d1 * x * x + d2 * y * y) % p == 0;
                    }
                }
                CHECK(r.found() == any);
                CHECK(any == (legendre(Scalar::of_int(f, -d1 * d2)) == 1));
                if (r.found()) check_solves(form, r, 0);
            }
        }
    }
}

TEST_CASE("high-arity forms over Z_p reduce to a ternary head") {
    Field z7 = Field::prime(7);
    DiagonalForm form = form_of(z7, {3, 1, 5, 2, 6});
    SolveResult r = isotropic_vector(form);
    check_solves(form, r, 0);
    CHECK(r.point[3].is_zero());
    CHECK(r.point[4].is_zero());
}

TEST_CASE("represent solves a x^2 + b y^2 = c over every Z_p") {
    Field z5 = Field::prime(5);
    auto [x, y] = represent(Scalar::of_int(z5, 1), Scalar::of_int(z5, 1), Scalar::of_int(z5, 2));
    CHECK(x.residue() == 1);
    CHECK(y.residue() == 1);

    Field z3 = Field::prime(3);
    auto [x2, y2] = represent(Scalar::of_int(z3, 1), Scalar::of_int(z3, 1), Scalar::of_int(z3, 1));
    CHECK(x2.residue() == 0); // the lexicographic tie rule picks (0,1) over (1,0)
    CHECK(y2.residue() == 1);

    Field z7 = Field::prime(7);
    auto [x3, y3] = represent(Scalar::of_int(z7, 2), Scalar::of_int(z7, 3), Scalar::of_int(z7, 1));
    CHECK(x3.residue() == 1);
    CHECK(y3.residue() == 3);
    CHECK((Scalar::of_int(z7, 2) * x3 * x3 + Scalar::of_int(z7, 3) * y3 * y3).residue() == 1);

    CHECK_THROWS_AS(represent(Scalar::zero(z5), Scalar::one(z5), Scalar::one(z5)),
                    ConstraintViolated);
    Field q = Field::rationals();
    CHECK_THROWS_AS(represent(Scalar::one(q), Scalar::one(q), Scalar::one(q)), UnsupportedField);
}

TEST_CASE("represent never fails across all nonzero triples") {
    for (int p : {3, 5, 7}) {
        Field f = Field::prime(p);
        for (int a = 1; a < p; ++a) {
            for (int b = 1; b < p; ++b) {
                for (int c = 1; c < p; ++c) {
                    auto [x, y] = represent(Scalar::of_int(f, a), Scalar::of_int(f, b),
                                            Scalar::of_int(f, c));
                    CHECK((a * x.residue() * x.residue() + b * y.residue() * y.residue()) % p ==
                          c % p);
                }
            }
        }
    }
}

TEST_CASE("unit representation over prime fields") {
    Field z7 = Field::prime(7);
    SolveResult one_var = unit_representation(form_of(z7, {1}));
    REQUIRE(one_var.found());
    CHECK(one_var.point[0].residue() == 1);

    CHECK(unit_representation(form_of(Field::prime(5), {3})).status == SolveStatus::Absent);

    DiagonalForm f23 = form_of(z7, {2, 3});
    SolveResult r = unit_representation(f23);
    check_solves(f23, r, 1);
    CHECK(r.point[0].residue() == 1);
    CHECK(r.point[1].residue() == 3);

    // m >= 2 always succeeds: spot-check every binary form over small fields
    for (int p : {3, 5, 7}) {
        Field f = Field::prime(p);
        for (int d1 = 1; d1 < p; ++d1) {
            for (int d2 = 1; d2 < p; ++d2) {
                DiagonalForm form = form_of(f, {d1, d2});
                check_solves(form, unit_representation(form), 1);
            }
        }
    }
}

TEST_CASE("rational isotropic search") {
    Field q = Field::rationals();
    DiagonalForm f112 = form_of(q, {1, 1, -2});
    SolveResult r = isotropic_vector(f112, 10);
    check_solves(f112, r, 0);
    CHECK(r.point[0].str() == "1");
    CHECK(r.point[1].str() == "1");
    CHECK(r.point[2].str() == "1");

    // binary square-class reasoning gives proofs both ways
    SolveResult bin = isotropic_vector(form_of(q, {1, -4}));
    REQUIRE(bin.found());
    CHECK(bin.point[0].str() == "1");
    CHECK(bin.point[1].str() == "1/2");
    CHECK(isotropic_vector(form_of(q, {1, 1})).status == SolveStatus::Absent);
    CHECK(isotropic_vector(form_of(q, {1, 3})).status == SolveStatus::Absent);
    CHECK(isotropic_vector(form_of(q, {1})).status == SolveStatus::Absent);

    // definite forms short-circuit to Undecided (no rational proof issued)
    SolveResult definite = isotropic_vector(form_of(q, {2, 3, 1}), 1000);
    CHECK(definite.status == SolveStatus::Undecided);
    CHECK(definite.note.find("definite") != std::string::npos);

    // x^2 - 3y^2 + z^2 has no nontrivial rational zero; the bounded search
    // cannot tell and stays honest
    CHECK(isotropic_vector(form_of(q, {1, -3, 1}), 8).status == SolveStatus::Undecided);

    // four variables: the head is definite, the pair sweep rescues (1,0,0,1)
    DiagonalForm f4 = form_of(q, {1, 1, 1, -1});
    SolveResult quad = isotropic_vector(f4, 10);
    check_solves(f4, quad, 0);
    CHECK(quad.point[0].str() == "1");
    CHECK(quad.point[1].str() == "0");
    CHECK(quad.point[2].str() == "0");
    CHECK(quad.point[3].str() == "1");
}

TEST_CASE("rational unit search") {
    Field q = Field::rationals();
    DiagonalForm f11 = form_of(q, {1, 1});
    SolveResult r = unit_representation(f11, 10);
    check_solves(f11, r, 1);
    CHECK(r.point[0].str() == "0");
    CHECK(r.point[1].str() == "1");

    CHECK(unit_representation(form_of(q, {4})).found());           // 1/4 = (1/2)^2
    CHECK(unit_representation(form_of(q, {3})).status == SolveStatus::Absent);

    // negative head, square tail: the single-coordinate sweep finds it
    DiagonalForm mixed = form_of(q, {-1, -1, -1, 4});
    SolveResult single = unit_representation(mixed, 5);
    check_solves(mixed, single, 1);
    CHECK(single.point[3].str() == "1/2");

    CHECK(unit_representation(form_of(q, {-1, -2}), 5).status == SolveStatus::Undecided);
    CHECK(unit_representation(form_of(q, {2, 3, 6}), 5).status == SolveStatus::Undecided);
}
