#include "nld/conformal.hpp"

#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "nld/errors.hpp"

namespace nld {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : fmt::format("{}/{}", num_, den_);
}

Rational operator+(Rational a, Rational b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw InvalidParameter("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string_view kind_name(FieldKind kind) noexcept {
    return kind == FieldKind::Scalar ? "Scalar" : "Spinor";
}

std::string to_string(const Exponent& e) {
    if (std::holds_alternative<Divergent>(e)) return "Divergent";
    return std::get<Rational>(e).str();
}

namespace {

void require_dimension(int n) {
    if (n < 2) throw InvalidDimension(fmt::format("space-time dimension {} is below 2", n));
}

}  // namespace

Rational conformal_degree(FieldKind kind, int n) {
    require_dimension(n);
    if (kind == FieldKind::Scalar) return Rational(1) - Rational(n, 2);
    return Rational(1 - n, 2);
}

Exponent nonlinearity_exponent(FieldKind kind, int n) {
    require_dimension(n);
    if (kind == FieldKind::Scalar) {
        const Rational denom = Rational(n, 2) - Rational(1);
        if (denom.num() == 0) return Divergent{};
        return Rational(2) / denom;
    }
    return Rational(2, n - 1);
}

std::string_view parameter_name(CouplingParameter p) noexcept {
    switch (p) {
        case CouplingParameter::AlphaS: return "alpha_s";
        case CouplingParameter::AlphaV: return "alpha_v";
        case CouplingParameter::AlphaW: return "alpha_w";
        case CouplingParameter::AlphaSW: return "alpha_sw";
    }
    return "?";
}

std::array<QuarticTerm, 4> quartic_terms_1p1() {
    return {{
        {"S^2", "(psibar psi)^2", CouplingParameter::AlphaS},
        {"W^2", "(psibar gamma5 psi)^2", CouplingParameter::AlphaW},
        {"SW", "(psibar psi)(psibar gamma5 psi)", CouplingParameter::AlphaSW},
        {"V^2", "(psibar gamma^mu psi)(psibar gamma_mu psi)", CouplingParameter::AlphaV},
    }};
}

std::vector<ExponentRow> exponent_table(int n_min, int n_max) {
    std::vector<ExponentRow> rows;
    for (FieldKind kind : {FieldKind::Scalar, FieldKind::Spinor})
        for (int n = n_max; n >= n_min; --n)
            rows.push_back({kind, n, conformal_degree(kind, n), nonlinearity_exponent(kind, n)});
    return rows;
}

std::string format_exponent_table(const std::vector<ExponentRow>& rows) {
    std::ostringstream os;
    os << fmt::format("{:<8} {:>3} {:>8} {:>10}\n", "kind", "n", "degree", "lambda");
    for (const auto& r : rows)
        os << fmt::format("{:<8} {:>3} {:>8} {:>10}\n", kind_name(r.kind), r.n, r.degree.str(),
                          to_string(r.lambda));
    return os.str();
}

}  // namespace nld
