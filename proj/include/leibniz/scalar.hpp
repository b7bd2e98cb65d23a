#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "leibniz/errors.hpp"

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Prime, Rationals, RationalFunction };

/// Descriptor of a supported coefficient field: GF(p), Q, or GF(p)(t).
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;        // characteristic, for Prime and RationalFunction
    std::string variable;      // indeterminate name, for RationalFunction

    static FieldSpec prime(std::int64_t p);
    static FieldSpec rationals();
    static FieldSpec rational_function(std::int64_t p, std::string variable = "t");

    std::int64_t characteristic() const;
    std::string description() const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::int64_t n);

/// Dense polynomial over GF(p), coefficients in [0,p), lowest degree first,
/// no trailing zero coefficients (zero polynomial has an empty vector).
struct GfPoly {
    std::int64_t p = 2;
    std::vector<std::int64_t> c;

    static GfPoly zero(std::int64_t p) { return {p, {}}; }
    static GfPoly constant(std::int64_t p, std::int64_t v);
    static GfPoly monomial(std::int64_t p, std::int64_t coeff, std::size_t deg);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    std::int64_t leading() const { return c.empty() ? 0 : c.back(); }
    void trim();

    bool operator==(const GfPoly&) const = default;
};

GfPoly operator+(const GfPoly& a, const GfPoly& b);
GfPoly operator-(const GfPoly& a, const GfPoly& b);
GfPoly operator*(const GfPoly& a, const GfPoly& b);
/// Quotient and remainder; divisor must be non-zero.
std::pair<GfPoly, GfPoly> divmod(const GfPoly& a, const GfPoly& b);
GfPoly gcd(const GfPoly& a, const GfPoly& b);  // monic result (or zero)
GfPoly make_monic(const GfPoly& a);

/// Exact element of GF(p), Q, or GF(p)(t), always kept in canonical form.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_integer(const FieldSpec& f, std::int64_t v);
    static Scalar residue(const FieldSpec& f, std::int64_t r);
    static Scalar rational(const BigInt& num, const BigInt& den = 1);
    static Scalar function(const FieldSpec& f, GfPoly num, GfPoly den);

    /// Parses the canonical string grammar of the field (see to_string).
    static Scalar parse(const FieldSpec& f, const std::string& text);
    std::string to_string() const;

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar&) const = default;

    // Representation accessors (valid for the matching field kind only).
    std::int64_t residue_value() const { return r_; }
    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    const GfPoly& poly_numerator() const { return fnum_; }
    const GfPoly& poly_denominator() const { return fden_; }

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::int64_t r_ = 0;       // Prime
    BigInt num_ = 0, den_ = 1; // Rationals
    GfPoly fnum_{2, {}}, fden_{2, {1}};  // RationalFunction

    void normalize();
};

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

/// True iff some s in the field satisfies s*s = a. Exact for any prime field,
/// Q, and GF(2)(t); throws Unsupported for GF(p)(t) with odd p.
bool is_square(const Scalar& a);

/// Decides solvability of X^2 + bX + c = 0 over the common field of b and c.
/// Exact for prime fields and Q. Over GF(2)(t): exact when b = 0, otherwise a
/// bounded search up to numerator/denominator degree max_degree.
Tri quadratic_has_root(const Scalar& b, const Scalar& c, int max_degree = 8);

/// Is every element of F a square (2-closed field)?
Tri is_2_closed(const FieldSpec& f);

}  // namespace leibniz
