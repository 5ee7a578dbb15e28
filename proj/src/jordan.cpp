#include "rbjordan/jordan.hpp"

#include <sstream>

namespace rbjordan {

BilinearForm::BilinearForm(std::vector<Scalar> d) : d_(std::move(d)) {
    if (d_.empty()) throw ConstraintViolated("a bilinear form needs at least one coefficient");
    for (const Scalar& di : d_) {
        if (!(di.field() == d_.front().field())) {
            throw MixedFields("bilinear form coefficients from different fields");
        }
        if (di.is_zero()) {
            throw ConstraintViolated("bilinear forms must be nondegenerate: d_i != 0");
        }
    }
}

BilinearForm BilinearForm::parse(const Field& f, std::string_view text) {
    return BilinearForm(DiagonalForm::parse(f, text).coeffs());
}

DiagonalForm BilinearForm::diagonal() const { return DiagonalForm(d_.front().field(), d_); }

std::string BilinearForm::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i > 0) out << ',';
        out << d_[i].str();
    }
    return out.str();
}

Scalar bilinear(const std::vector<Scalar>& v, const std::vector<Scalar>& u,
                const BilinearForm& form) {
    if (v.size() != form.size() || u.size() != form.size()) {
        throw DimensionMismatch("bilinear pairing needs coordinate length " +
                                std::to_string(form.size()));
    }
    Scalar acc = Scalar::zero(form.d(0).field());
    for (std::size_t i = 0; i < form.size(); ++i) acc = acc + form.d(i) * v[i] * u[i];
    return acc;
}

bool AlgebraElement::is_zero() const {
    if (!alpha.is_zero()) return false;
    for (const Scalar& vi : v) {
        if (!vi.is_zero()) return false;
    }
    return true;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    if (v.size() != rhs.v.size()) {
        throw DimensionMismatch("comparing elements of different algebras");
    }
    if (!(alpha == rhs.alpha)) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] == rhs.v[i])) return false;
    }
    return true;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.v.size() != y.v.size()) throw DimensionMismatch("adding elements of different algebras");
    AlgebraElement out{x.alpha + y.alpha, {}};
    out.v.reserve(x.v.size());
    for (std::size_t i = 0; i < x.v.size(); ++i) out.v.push_back(x.v[i] + y.v[i]);
    return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.v.size() != y.v.size()) {
        throw DimensionMismatch("subtracting elements of different algebras");
    }
    AlgebraElement out{x.alpha - y.alpha, {}};
    out.v.reserve(x.v.size());
    for (std::size_t i = 0; i < x.v.size(); ++i) out.v.push_back(x.v[i] - y.v[i]);
    return out;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
    AlgebraElement out{s * x.alpha, {}};
    out.v.reserve(x.v.size());
    for (const Scalar& vi : x.v) out.v.push_back(s * vi);
    return out;
}

CliffordAlgebra::CliffordAlgebra(const Field& field, BilinearForm form)
    : field_(field), form_(std::move(form)) {
    if (!field_.supports_arithmetic()) {
        throw UnsupportedField("algebra elements need Zp or Q arithmetic, have " +
                               field_.descriptor());
    }
    if (!(form_.d(0).field() == field_)) {
        throw MixedFields("form coefficients do not live in the algebra's field");
    }
    if (form_.size() < 2) {
        throw ConstraintViolated("J_{n+1}(f) is simple only for dim V >= 2");
    }
    if (form_.size() > kMaxN) {
        throw ConstraintViolated("dim V capped at " + std::to_string(kMaxN));
    }
}

AlgebraElement CliffordAlgebra::zero() const {
    return AlgebraElement{Scalar::zero(field_), std::vector<Scalar>(n(), Scalar::zero(field_))};
}

AlgebraElement CliffordAlgebra::one() const {
    return AlgebraElement{Scalar::one(field_), std::vector<Scalar>(n(), Scalar::zero(field_))};
}

AlgebraElement CliffordAlgebra::basis(std::size_t j) const {
    if (j >= dim()) throw DimensionMismatch("basis index out of range");
    AlgebraElement out = zero();
    if (j == 0) {
        out.alpha = Scalar::one(field_);
    } else {
        out.v[j - 1] = Scalar::one(field_);
    }
    return out;
}

AlgebraElement CliffordAlgebra::element(Scalar alpha, std::vector<Scalar> v) const {
    AlgebraElement out{std::move(alpha), std::move(v)};
    require_member(out);
    return out;
}

void CliffordAlgebra::require_member(const AlgebraElement& x) const {
    if (x.v.size() != n()) {
        throw DimensionMismatch("element has " + std::to_string(x.v.size()) +
                                " coordinates, algebra needs " + std::to_string(n()));
    }
    if (!(x.alpha.field() == field_)) {
        throw MixedFields("element scalars do not live in the algebra's field");
    }
}

AlgebraElement CliffordAlgebra::product(const AlgebraElement& x, const AlgebraElement& y) const {
    require_member(x);
    require_member(y);
    AlgebraElement out{x.alpha * y.alpha + bilinear(x.v, y.v, form_), {}};
    out.v.reserve(n());
    for (std::size_t i = 0; i < n(); ++i) {
        out.v.push_back(x.alpha * y.v[i] + y.alpha * x.v[i]);
    }
    return out;
}

TraceNorm CliffordAlgebra::trace_norm(const AlgebraElement& x) const {
    require_member(x);
    Scalar two = Scalar::of_int(field_, 2);
    return TraceNorm{two * x.alpha, x.alpha * x.alpha - bilinear(x.v, x.v, form_)};
}

AlgebraElement CliffordAlgebra::parse_element(std::string_view text) const {
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("element text must look like \"alpha; v1,...,vn\"");
    }
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    Scalar alpha = Scalar::parse(field_, trim(text.substr(0, semi)));
    std::string_view coords = trim(text.substr(semi + 1));
    std::vector<Scalar> v;
    std::size_t start = 0;
    while (start <= coords.size()) {
        std::size_t comma = coords.find(',', start);
        std::string_view part =
            comma == std::string_view::npos ? coords.substr(start) : coords.substr(start, comma - start);
        v.push_back(Scalar::parse(field_, trim(part)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return element(std::move(alpha), std::move(v));
}

std::string CliffordAlgebra::element_str(const AlgebraElement& x) const {
    std::ostringstream out;
    out << x.alpha.str() << "; ";
    for (std::size_t i = 0; i < x.v.size(); ++i) {
        if (i > 0) out << ',';
        out << x.v[i].str();
    }
    return out.str();
}

bool CliffordAlgebra::operator==(const CliffordAlgebra& rhs) const {
    if (!(field_ == rhs.field_) || n() != rhs.n()) return false;
    for (std::size_t i = 0; i < n(); ++i) {
        if (!(form_.d(i) == rhs.form_.d(i))) return false;
    }
    return true;
}

} // namespace rbjordan
