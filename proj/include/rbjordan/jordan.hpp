#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rbjordan/quadform.hpp"
#include "rbjordan/scalar.hpp"

namespace rbjordan {

/// Cap on dim V. Everything here targets small algebras; density and full
/// enumeration stop being sensible far below this.
inline constexpr std::size_t kMaxN = 16;

/// Diagonal coefficients d_1..d_n of the symmetric pairing
/// (v, u) = sum d_i v_i u_i. All entries nonzero (nondegeneracy).
class BilinearForm {
public:
    explicit BilinearForm(std::vector<Scalar> d);
    static BilinearForm parse(const Field& f, std::string_view text);

    std::size_t size() const { return d_.size(); }
    const Scalar& d(std::size_t i) const { return d_.at(i); } // 0-based
    const std::vector<Scalar>& coeffs() const { return d_; }
    /// The same coefficients as a solvable quadratic form.
    DiagonalForm diagonal() const;
    std::string str() const;

private:
    std::vector<Scalar> d_;
};

/// (v, u) with respect to the form; lengths must agree.
Scalar bilinear(const std::vector<Scalar>& v, const std::vector<Scalar>& u,
                const BilinearForm& form);

/// Element alpha*1 + sum v_i e_i of a Clifford-type Jordan algebra.
struct AlgebraElement {
    Scalar alpha;
    std::vector<Scalar> v;

    bool is_zero() const;
    bool operator==(const AlgebraElement& rhs) const;
    bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);

struct TraceNorm {
    Scalar t;
    Scalar n;
};

/// The Jordan algebra J_{n+1}(f) = F.1 + V on a diagonal symmetric form,
/// with product (a.1 + v)(b.1 + u) = (ab + (v,u)).1 + (au + bv).
/// Simple for n >= 2, which the constructor enforces.
class CliffordAlgebra {
public:
    CliffordAlgebra(const Field& field, BilinearForm form);

    const Field& field() const { return field_; }
    const BilinearForm& form() const { return form_; }
    std::size_t n() const { return form_.size(); }
    std::size_t dim() const { return n() + 1; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    /// Basis order: index 0 is the unit, index i >= 1 is e_i.
    AlgebraElement basis(std::size_t j) const;
    AlgebraElement element(Scalar alpha, std::vector<Scalar> v) const;

    AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) const;
    TraceNorm trace_norm(const AlgebraElement& x) const;

    /// Element text: "alpha; v1,...,vn".
    AlgebraElement parse_element(std::string_view text) const;
    std::string element_str(const AlgebraElement& x) const;

    bool operator==(const CliffordAlgebra& rhs) const;

private:
    void require_member(const AlgebraElement& x) const;

    Field field_;
    BilinearForm form_;
};

} // namespace rbjordan
