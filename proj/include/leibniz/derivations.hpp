#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Basis of the solution space of f([a,b]) = [f(a),b] + [a,f(b)].
/// Matrices act on coordinate columns: f(e_j) = sum_i M(i,j) e_i.
struct DerivationSpace {
    const Algebra* algebra = nullptr;
    std::vector<Matrix> basis;
    std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const Algebra& a);

bool is_derivation(const Algebra& a, const Matrix& f);

struct InvarianceWitness {
    std::string center;       // "left", "right", or "full"
    std::size_t derivation;   // index into the basis
    Vector vector;            // center element whose image escapes
};

struct InvarianceReport {
    bool pass = true;
    std::vector<InvarianceWitness> witnesses;
};

/// Checks that every basis derivation maps each center back into itself.
/// Requires the algebra to satisfy the left Leibniz identity.
InvarianceReport check_center_invariance(const Algebra& a, const DerivationSpace& d);

/// Commutator f g - g f of two endomorphism matrices.
Matrix commutator(const Matrix& f, const Matrix& g);

}  // namespace leibniz
