#include "leibniz/derivations.hpp"

namespace leibniz {

DerivationSpace derivation_space(const Algebra& a) {
    std::size_t n = a.dim();
    const FieldSpec& f = a.field();
    // unknowns: matrix entries D(r,s), flattened row-major as r*n + s
    // one equation per (i, j, l): coefficient of e_l in
    //   f([e_i,e_j]) - [f(e_i),e_j] - [e_i,f(e_j)] = 0
    Matrix sys(f, n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++row) {
                // f([e_i,e_j]) = sum_k c_ij^k sum_m D(m,k) e_m : contributes c_ij^k at D(l,k)
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& c = a.tensor(i, j, k);
                    if (c.is_zero()) continue;
                    std::size_t col = l * n + k;
                    sys.at(row, col) = sys.at(row, col) + c;
                }
                // -[f(e_i),e_j] = -sum_m D(m,i) c_mj^l
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& c = a.tensor(m, j, l);
                    if (c.is_zero()) continue;
                    std::size_t col = m * n + i;
                    sys.at(row, col) = sys.at(row, col) - c;
                }
                // -[e_i,f(e_j)] = -sum_m D(m,j) c_im^l
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& c = a.tensor(i, m, l);
                    if (c.is_zero()) continue;
                    std::size_t col = m * n + j;
                    sys.at(row, col) = sys.at(row, col) - c;
                }
            }
    Subspace kernel = nullspace(sys);
    DerivationSpace result;
    result.algebra = &a;
    for (std::size_t b = 0; b < kernel.dim(); ++b) {
        Vector flat = kernel.basis_row(b);
        Matrix d(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) d.at(r, s) = flat[r * n + s];
        result.basis.push_back(std::move(d));
    }
    return result;
}

bool is_derivation(const Algebra& a, const Matrix& f) {
    std::size_t n = a.dim();
    if (f.rows() != n || f.cols() != n)
        throw DimensionMismatch("derivation candidate must be n x n");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector ei = Vector::unit(a.field(), n, i);
            Vector ej = Vector::unit(a.field(), n, j);
            Vector lhs = f.apply(a.bracket(ei, ej));
            Vector rhs = a.bracket(f.apply(ei), ej) + a.bracket(ei, f.apply(ej));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

InvarianceReport check_center_invariance(const Algebra& a, const DerivationSpace& d) {
    if (!check_left_leibniz(a).pass)
        throw IdentityFailed("center invariance requires a valid Leibniz algebra");
    Centers c = centers(a);
    InvarianceReport report;
    struct Named { const char* label; const Subspace* space; };
    Named named[] = {{"left", &c.left}, {"right", &c.right}, {"full", &c.full}};
    for (std::size_t di = 0; di < d.basis.size(); ++di)
        for (const auto& [label, space] : named)
            for (std::size_t r = 0; r < space->dim(); ++r) {
                Vector img = d.basis[di].apply(space->basis_row(r));
                if (!space->contains(img)) {
                    report.pass = false;
                    report.witnesses.push_back({label, di, space->basis_row(r)});
                }
            }
    return report;
}

Matrix commutator(const Matrix& f, const Matrix& g) { return f * g - g * f; }

}  // namespace leibniz
