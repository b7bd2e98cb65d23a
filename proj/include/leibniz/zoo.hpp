#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Constructors for the named algebras, with their field-theoretic side
/// conditions validated at build time.

/// dim 2, basis {a1,a2}, [a1,a1] = a2, all other brackets zero.
Algebra build_cyclic_dim2(const FieldSpec& f);

/// dim m+1, basis {a_1..a_m, w}; abelian A with [w, a_i] = sigma a_i.
/// Requires m >= 2 and sigma != 0.
Algebra build_theorem_A(const FieldSpec& f, std::size_t m, const Scalar& sigma);

/// dim 3, basis {z,a,v}; [a,a]=z, [v,v]=eta z, [v,a]=[a,v]=a, z central.
/// Requires char 2 and X^2 + eta rootless.
Algebra build_example_3_10(const FieldSpec& f, const Scalar& eta);

/// dim 4, basis {z,a,b,v}; requires char 2 and X^2+sigma, X^2+eta rootless.
Algebra build_example_3_8(const FieldSpec& f, const Scalar& sigma, const Scalar& eta);

/// dim 3, basis {z,a,v}; [a,a]=z, [v,v]=eta z, [v,a]=a+lambda z,
/// [a,v]=a+mu z. Requires char 2 and X^2+(mu+lambda)X+eta rootless.
Algebra build_theorem_C(const FieldSpec& f, const Scalar& eta, const Scalar& lambda,
                        const Scalar& mu);

/// dim 3 Lie algebra, [x,y]=z, [y,x]=-z; negative control for the property.
Algebra build_heisenberg(const FieldSpec& f);

/// dim m+1, basis {x_1..x_m, z}; [x_i,x_i] = squares_i z, z central.
/// Strongness ([x,x] != 0 off the center) is validated: exhaustively over
/// finite fields, exactly for m <= 2 over GF(2)(t), by grid sampling beyond.
Algebra build_strong_extraspecial(const FieldSpec& f, std::size_t m,
                                  const std::vector<Scalar>& squares);

struct BFamilyResult {
    Algebra algebra;
    LeibnizCheck identity;  // attached, not raised: these tables are candidates
};

struct B1Params {
    std::vector<Scalar> squares;  // diagonal squares of the extraspecial core
    Scalar eta;                   // [v,v] = eta z
    std::vector<Scalar> xi;       // [v,x_i] = x_i + xi_i z (defaults to zero)
};

struct B2Params {
    std::vector<Scalar> squares;
    Scalar nu;                    // [v,v] = nu z (may be zero)
    std::vector<Scalar> xi;       // [v,x_i] = x_i + xi_i z
    std::vector<Scalar> xi_right; // [x_i,v] = x_i + xi_right_i z
};

BFamilyResult build_B1(const FieldSpec& f, const B1Params& params);
BFamilyResult build_B2(const FieldSpec& f, const B2Params& params);

}  // namespace leibniz
