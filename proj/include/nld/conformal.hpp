#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nld {

/// Exact rational number with a positive denominator, always in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class FieldKind { Scalar, Spinor };

std::string_view kind_name(FieldKind kind) noexcept;

/// The interaction exponent has no finite value (scalar field in 1+1).
struct Divergent {
    friend bool operator==(Divergent, Divergent) { return true; }
};

using Exponent = std::variant<Rational, Divergent>;

std::string to_string(const Exponent& e);

/// Scaling dimension of the field in n space-time dimensions:
/// scalar 1 - n/2, spinor (1 - n)/2. Throws InvalidDimension for n < 2.
Rational conformal_degree(FieldKind kind, int n);

/// Exponent lambda of the self-interaction chi^lambda that keeps the coupling
/// dimensionless: scalar 2/(n/2 - 1) (Divergent at n = 2), spinor 2/(n - 1).
Exponent nonlinearity_exponent(FieldKind kind, int n);

enum class CouplingParameter { AlphaS, AlphaV, AlphaW, AlphaSW };

std::string_view parameter_name(CouplingParameter p) noexcept;

struct QuarticTerm {
    std::string_view name;
    std::string_view bilinear_form;
    CouplingParameter drives;
};

/// The four quartic self-interactions available to a 1+1 spinor. Tensor and
/// pseudo-vector forms reduce to these in two dimensions.
std::array<QuarticTerm, 4> quartic_terms_1p1();

struct ExponentRow {
    FieldKind kind;
    int n;
    Rational degree;
    Exponent lambda;
};

std::vector<ExponentRow> exponent_table(int n_min = 2, int n_max = 4);

/// Plain-text table with one row per (kind, n).
std::string format_exponent_table(const std::vector<ExponentRow>& rows);

}  // namespace nld
