#include "leibniz/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace leibniz {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base = mod(base, p);
    while (exp > 0) {
        if (exp & 1) acc = mod(acc * base, p);
        base = mod(base * base, p);
        exp >>= 1;
    }
    return acc;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    return mod(t, p);
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p, {}};
}

FieldSpec FieldSpec::rationals() { return {FieldKind::Rationals, 0, {}}; }

FieldSpec FieldSpec::rational_function(std::int64_t p, std::string variable) {
    if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
    if (variable.empty()) throw ParseError("variable name must be nonempty");
    return {FieldKind::RationalFunction, p, std::move(variable)};
}

std::int64_t FieldSpec::characteristic() const {
    return kind == FieldKind::Rationals ? 0 : p;
}

std::string FieldSpec::description() const {
    switch (kind) {
        case FieldKind::Prime: return "GF(" + std::to_string(p) + ")";
        case FieldKind::Rationals: return "Q";
        case FieldKind::RationalFunction:
            return "GF(" + std::to_string(p) + ")(" + variable + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- GfPoly

GfPoly GfPoly::constant(std::int64_t p, std::int64_t v) {
    GfPoly r{p, {mod(v, p)}};
    r.trim();
    return r;
}

GfPoly GfPoly::monomial(std::int64_t p, std::int64_t coeff, std::size_t deg) {
    coeff = mod(coeff, p);
    if (coeff == 0) return zero(p);
    GfPoly r{p, std::vector<std::int64_t>(deg + 1, 0)};
    r.c[deg] = coeff;
    return r;
}

void GfPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

GfPoly operator+(const GfPoly& a, const GfPoly& b) {
    GfPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::int64_t v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = mod(v, a.p);
    }
    r.trim();
    return r;
}

GfPoly operator-(const GfPoly& a, const GfPoly& b) {
    GfPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::int64_t v = (i < a.c.size() ? a.c[i] : 0) - (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = mod(v, a.p);
    }
    r.trim();
    return r;
}

GfPoly operator*(const GfPoly& a, const GfPoly& b) {
    if (a.is_zero() || b.is_zero()) return GfPoly::zero(a.p);
    GfPoly r{a.p, std::vector<std::int64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = mod(r.c[i + j] + a.c[i] * b.c[j], a.p);
    r.trim();
    return r;
}

std::pair<GfPoly, GfPoly> divmod(const GfPoly& a, const GfPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    GfPoly rem = a;
    GfPoly quot = GfPoly::zero(a.p);
    std::int64_t lead_inv = mod_inverse(b.leading(), b.p);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        std::int64_t factor = mod(rem.leading() * lead_inv, b.p);
        GfPoly term = GfPoly::monomial(b.p, factor, shift);
        quot = quot + term;
        rem = rem - term * b;
    }
    return {quot, rem};
}

GfPoly gcd(const GfPoly& a, const GfPoly& b) {
    GfPoly x = a, y = b;
    while (!y.is_zero()) {
        GfPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return make_monic(x);
}

GfPoly make_monic(const GfPoly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    std::int64_t inv = mod_inverse(a.leading(), a.p);
    GfPoly r = a;
    for (auto& v : r.c) v = mod(v * inv, a.p);
    return r;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(const FieldSpec& f) { return from_integer(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_integer(f, 1); }

Scalar Scalar::from_integer(const FieldSpec& f, std::int64_t v) {
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
        case FieldKind::Prime:
            s.r_ = mod(v, f.p);
            break;
        case FieldKind::Rationals:
            s.num_ = v;
            s.den_ = 1;
            break;
        case FieldKind::RationalFunction:
            s.fnum_ = GfPoly::constant(f.p, v);
            s.fden_ = GfPoly::constant(f.p, 1);
            break;
    }
    return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::int64_t r) {
    if (f.kind != FieldKind::Prime) throw FieldMismatch("residue requires a prime field");
    return from_integer(f, r);
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
}

Scalar Scalar::function(const FieldSpec& f, GfPoly num, GfPoly den) {
    if (f.kind != FieldKind::RationalFunction)
        throw FieldMismatch("function scalar requires a rational-function field");
    Scalar s;
    s.field_ = f;
    s.fnum_ = std::move(num);
    s.fden_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    switch (field_.kind) {
        case FieldKind::Prime:
            r_ = mod(r_, field_.p);
            break;
        case FieldKind::Rationals: {
            if (den_ == 0) throw DivisionByZero();
            if (den_ < 0) { num_ = -num_; den_ = -den_; }
            BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
            if (g > 1) { num_ /= g; den_ /= g; }
            if (num_ == 0) den_ = 1;
            break;
        }
        case FieldKind::RationalFunction: {
            if (fden_.is_zero()) throw DivisionByZero();
            GfPoly g = gcd(fnum_, fden_);
            if (g.degree() > 0) {
                fnum_ = divmod(fnum_, g).first;
                fden_ = divmod(fden_, g).first;
            }
            std::int64_t lead = fden_.leading();
            if (lead != 1) {
                std::int64_t inv = mod_inverse(lead, field_.p);
                for (auto& v : fnum_.c) v = mod(v * inv, field_.p);
                for (auto& v : fden_.c) v = mod(v * inv, field_.p);
            }
            if (fnum_.is_zero()) fden_ = GfPoly::constant(field_.p, 1);
            break;
        }
    }
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::Prime: return r_ == 0;
        case FieldKind::Rationals: return num_ == 0;
        case FieldKind::RationalFunction: return fnum_.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const { return zero(field_) - *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return one(field_) / *this;
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch("scalars belong to different fields: " +
                            a.field().description() + " vs " + b.field().description());
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar r;
    switch (a.field().kind) {
        case FieldKind::Prime:
            return Scalar::from_integer(a.field(), a.r_ + b.r_);
        case FieldKind::Rationals:
            return Scalar::rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        case FieldKind::RationalFunction:
            return Scalar::function(a.field(), a.fnum_ * b.fden_ + b.fnum_ * a.fden_,
                                    a.fden_ * b.fden_);
    }
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    switch (a.field().kind) {
        case FieldKind::Prime:
            return Scalar::from_integer(a.field(), a.r_ - b.r_);
        case FieldKind::Rationals:
            return Scalar::rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
        case FieldKind::RationalFunction:
            return Scalar::function(a.field(), a.fnum_ * b.fden_ - b.fnum_ * a.fden_,
                                    a.fden_ * b.fden_);
    }
    return {};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    switch (a.field().kind) {
        case FieldKind::Prime:
            return Scalar::from_integer(a.field(), mod(a.r_ * b.r_, a.field().p));
        case FieldKind::Rationals:
            return Scalar::rational(a.num_ * b.num_, a.den_ * b.den_);
        case FieldKind::RationalFunction:
            return Scalar::function(a.field(), a.fnum_ * b.fnum_, a.fden_ * b.fden_);
    }
    return {};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero();
    switch (a.field().kind) {
        case FieldKind::Prime:
            return Scalar::from_integer(a.field(),
                                        mod(a.r_ * mod_inverse(b.r_, a.field().p), a.field().p));
        case FieldKind::Rationals:
            return Scalar::rational(a.num_ * b.den_, a.den_ * b.num_);
        case FieldKind::RationalFunction:
            return Scalar::function(a.field(), a.fnum_ * b.fden_, a.fden_ * b.fnum_);
    }
    return {};
}

// ---------------------------------------------------------------- parsing

namespace {

std::string strip_ws(const std::string& s) {
    std::string r;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(ch);
    return r;
}

std::int64_t parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in '" + s + "' at " + std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
}

// poly := ['-'] term (('+'|'-') term)* ; term := INT | [INT ['*']] var ['^' INT]
GfPoly parse_poly(const FieldSpec& f, const std::string& s) {
    if (s.empty()) throw ParseError("empty polynomial");
    const std::string& var = f.variable;
    GfPoly acc = GfPoly::zero(f.p);
    std::size_t pos = 0;
    int sign = 1;
    if (s[pos] == '-') { sign = -1; ++pos; }
    else if (s[pos] == '+') ++pos;
    while (true) {
        std::int64_t coeff = 1;
        bool saw_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_int(s, pos);
            saw_coeff = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        std::size_t deg = 0;
        if (s.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            deg = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                deg = static_cast<std::size_t>(parse_int(s, pos));
            }
        } else if (!saw_coeff) {
            throw ParseError("expected monomial in '" + s + "' at " + std::to_string(pos));
        }
        acc = acc + GfPoly::monomial(f.p, sign * coeff, deg);
        if (pos == s.size()) break;
        if (s[pos] == '+') sign = 1;
        else if (s[pos] == '-') sign = -1;
        else throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in '" + s + "'");
        ++pos;
        if (pos == s.size()) throw ParseError("dangling sign in '" + s + "'");
    }
    return acc;
}

std::string strip_outer_parens(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        // ensure the opening paren matches the final one
        int depth = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) return s;  // closes early: not outer parens
        }
        return s.substr(1, s.size() - 2);
    }
    return s;
}

std::string poly_to_string(const GfPoly& poly, const std::string& var) {
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = poly.degree(); d >= 0; --d) {
        std::int64_t coeff = poly.c[static_cast<std::size_t>(d)];
        if (coeff == 0) continue;
        if (!first) out << "+";
        first = false;
        if (d == 0) {
            out << coeff;
        } else {
            if (coeff != 1) out << coeff;
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) throw ParseError("empty scalar");
    switch (f.kind) {
        case FieldKind::Prime: {
            std::size_t pos = 0;
            int sign = 1;
            if (s[pos] == '-') { sign = -1; ++pos; }
            else if (s[pos] == '+') ++pos;
            std::int64_t v = parse_int(s, pos);
            if (pos != s.size()) throw ParseError("trailing characters in '" + text + "'");
            return from_integer(f, sign * v);
        }
        case FieldKind::Rationals: {
            std::size_t slash = s.find('/');
            auto parse_bigint = [](const std::string& part) {
                if (part.empty()) throw ParseError("empty integer");
                std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
                if (i == part.size()) throw ParseError("bad integer '" + part + "'");
                for (; i < part.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(part[i])))
                        throw ParseError("bad integer '" + part + "'");
                return BigInt(part);
            };
            if (slash == std::string::npos) return rational(parse_bigint(s));
            return rational(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
        }
        case FieldKind::RationalFunction: {
            // split at the top-level '/'
            int depth = 0;
            std::size_t slash = std::string::npos;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')') --depth;
                else if (s[i] == '/' && depth == 0) {
                    if (slash != std::string::npos)
                        throw ParseError("multiple top-level '/' in '" + text + "'");
                    slash = i;
                }
            }
            std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
            GfPoly num = parse_poly(f, strip_outer_parens(num_part));
            GfPoly den = GfPoly::constant(f.p, 1);
            if (slash != std::string::npos)
                den = parse_poly(f, strip_outer_parens(s.substr(slash + 1)));
            return function(f, std::move(num), std::move(den));
        }
    }
    throw ParseError("unknown field kind");
}

std::string Scalar::to_string() const {
    switch (field_.kind) {
        case FieldKind::Prime:
            return std::to_string(r_);
        case FieldKind::Rationals:
            if (den_ == 1) return num_.str();
            return num_.str() + "/" + den_.str();
        case FieldKind::RationalFunction: {
            std::string num = poly_to_string(fnum_, field_.variable);
            if (fden_ == GfPoly::constant(field_.p, 1)) return num;
            return "(" + num + ")/(" + poly_to_string(fden_, field_.variable) + ")";
        }
    }
    return "?";
}

// ------------------------------------------------------- square predicates

std::string to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

namespace {

bool bigint_is_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v;
}

// Over GF(2), f is a square iff every odd-degree coefficient vanishes
// (Frobenius: (sum a_i t^i)^2 = sum a_i t^(2i)).
bool gf2_poly_is_square(const GfPoly& poly) {
    for (std::size_t i = 1; i < poly.c.size(); i += 2)
        if (poly.c[i] != 0) return false;
    return true;
}

}  // namespace

bool is_square(const Scalar& a) {
    const FieldSpec& f = a.field();
    if (a.is_zero()) return true;
    switch (f.kind) {
        case FieldKind::Prime: {
            if (f.p == 2) return true;
            // Euler criterion
            return mod_pow(a.residue_value(), (f.p - 1) / 2, f.p) == 1;
        }
        case FieldKind::Rationals:
            if (a.numerator() < 0) return false;
            return bigint_is_square(a.numerator()) && bigint_is_square(a.denominator());
        case FieldKind::RationalFunction:
            if (f.p != 2)
                throw Unsupported("is_square over GF(p)(t) is only supported for p = 2");
            return gf2_poly_is_square(a.poly_numerator()) && gf2_poly_is_square(a.poly_denominator());
    }
    return false;
}

Tri quadratic_has_root(const Scalar& b, const Scalar& c, int max_degree) {
    require_same_field(b, c);
    const FieldSpec& f = b.field();
    switch (f.kind) {
        case FieldKind::Prime: {
            if (f.p > (1 << 16))
                throw BudgetExceeded("exhaustive quadratic scan limited to p <= 2^16");
            for (std::int64_t x = 0; x < f.p; ++x) {
                Scalar sx = Scalar::from_integer(f, x);
                if ((sx * sx + b * sx + c).is_zero()) return Tri::Yes;
            }
            return Tri::No;
        }
        case FieldKind::Rationals: {
            // rational root exists iff the discriminant is a rational square
            Scalar disc = b * b - Scalar::from_integer(f, 4) * c;
            return is_square(disc) ? Tri::Yes : Tri::No;
        }
        case FieldKind::RationalFunction: {
            if (f.p != 2)
                throw Unsupported("quadratic root search over GF(p)(t) is only supported for p = 2");
            if (b.is_zero()) {
                // char 2: X^2 = c solvable iff c is a square
                return is_square(c) ? Tri::Yes : Tri::No;
            }
            // bounded search: x = g/h with deg(g), deg(h) <= max_degree, h monic
            std::size_t limit = std::size_t{1} << (max_degree + 1);
            for (std::size_t hbits = 1; hbits < limit; ++hbits) {
                GfPoly h{2, {}};
                for (std::size_t i = 0; i <= static_cast<std::size_t>(max_degree); ++i)
                    if (hbits & (std::size_t{1} << i)) h.c.resize(i + 1), h.c[i] = 1;
                h.trim();
                if (h.leading() != 1) continue;  // monic denominators only
                for (std::size_t gbits = 0; gbits < limit; ++gbits) {
                    GfPoly g{2, {}};
                    for (std::size_t i = 0; i <= static_cast<std::size_t>(max_degree); ++i)
                        if (gbits & (std::size_t{1} << i)) g.c.resize(i + 1), g.c[i] = 1;
                    g.trim();
                    Scalar x = Scalar::function(f, g, h);
                    if ((x * x + b * x + c).is_zero()) return Tri::Yes;
                }
            }
            return Tri::Unknown;
        }
    }
    return Tri::Unknown;
}

Tri is_2_closed(const FieldSpec& f) {
    switch (f.kind) {
        case FieldKind::Prime:
            // |U(GF(2))| = 1 is odd, hence 2-divisible; odd p has non-residues
            return f.p == 2 ? Tri::Yes : Tri::No;
        case FieldKind::Rationals:
            return Tri::No;  // witness: 2
        case FieldKind::RationalFunction:
            return Tri::No;  // witness: t (odd degree, never a square)
    }
    return Tri::Unknown;
}

}  // namespace leibniz
