#include "leibniz/algebra.hpp"

#include <algorithm>
#include <set>

namespace leibniz {

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_names, std::string name)
    : field_(std::move(field)), dim_(basis_names.size()),
      basis_names_(std::move(basis_names)), name_(std::move(name)) {
    std::set<std::string> seen;
    for (const auto& b : basis_names_) {
        if (b.empty()) throw ParseError("empty basis name");
        if (!seen.insert(b).second) throw ParseError("duplicate basis name '" + b + "'");
    }
    tensor_.assign(dim_ * dim_ * dim_, Scalar::zero(field_));
}

void Algebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
    if (value.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) set_tensor_entry(i, j, k, value[k]);
}

void Algebra::set_tensor_entry(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    if (value.field() != field_) throw FieldMismatch("tensor entry field differs");
    tensor_[(i * dim_ + j) * dim_ + k] = std::move(value);
}

Vector Algebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vector v = Vector::zero(field_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = tensor(i, j, k);
    return v;
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatch("bracket arguments must have the algebra dimension");
    Vector r = Vector::zero(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (tensor(i, j, k).is_zero()) continue;
                r[k] = r[k] + c * tensor(i, j, k);
            }
        }
    }
    return r;
}

std::optional<std::size_t> Algebra::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_names_.size(); ++i)
        if (basis_names_[i] == name) return i;
    return std::nullopt;
}

// --------------------------------------------------------------- handles

bool is_bracket_closed(const Algebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(a.bracket(s.basis_row(i), s.basis_row(j)))) return false;
    return true;
}

SubalgebraHandle make_subalgebra(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw AmbientMismatch("subspace ambient differs from algebra");
    if (!is_bracket_closed(a, s))
        throw NotClosed("span is not closed under the bracket");
    return {&a, s, true};
}

// --------------------------------------------------------------- identity

LeibnizCheck check_left_leibniz(const Algebra& a) {
    LeibnizCheck result;
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector ei = Vector::unit(a.field(), n, i);
                Vector ej = Vector::unit(a.field(), n, j);
                Vector ek = Vector::unit(a.field(), n, k);
                Vector lhs = a.bracket(a.bracket(ei, ej), ek);
                Vector rhs = a.bracket(ei, a.bracket(ej, ek)) - a.bracket(ej, a.bracket(ei, ek));
                if (!(lhs == rhs)) {
                    result.pass = false;
                    result.violations.push_back({i, j, k});
                }
            }
    return result;
}

bool is_lie(const Algebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (!a.bracket_basis(i, i).is_zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(a.bracket_basis(i, j) + a.bracket_basis(j, i)).is_zero()) return false;
    return true;
}

Subspace leibniz_kernel(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(a.bracket_basis(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(a.bracket_basis(i, j) + a.bracket_basis(j, i));
    return Subspace::span(a.field(), n, gens);
}

// --------------------------------------------------------------- centers

namespace {

// Matrix of x -> [x, b] in coordinates: entry (k, i) = sum_j b_j c_{ij}^k.
Matrix left_action_on(const Algebra& a, const Vector& b) {
    std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                m.at(k, i) = m.at(k, i) + b[j] * a.tensor(i, j, k);
        }
    return m;
}

// Matrix of x -> [b, x]: entry (k, i) = sum_j b_j c_{ji}^k.
Matrix right_action_on(const Algebra& a, const Vector& b) {
    std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                m.at(k, i) = m.at(k, i) + b[j] * a.tensor(j, i, k);
        }
    return m;
}

Matrix stack(const std::vector<Matrix>& blocks, const FieldSpec& f, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Matrix m(f, rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(at + r, c) = b.at(r, c);
        at += b.rows();
    }
    return m;
}

}  // namespace

Matrix left_multiplication(const Algebra& a, const Vector& x) {
    std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector img = a.bracket(x, Vector::unit(a.field(), n, j));
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = img[k];
    }
    return m;
}

Centers centers(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Matrix> left_blocks, right_blocks;
    for (std::size_t j = 0; j < n; ++j) {
        Vector ej = Vector::unit(a.field(), n, j);
        left_blocks.push_back(left_action_on(a, ej));
        right_blocks.push_back(right_action_on(a, ej));
    }
    Subspace left = nullspace(stack(left_blocks, a.field(), n));
    Subspace right = nullspace(stack(right_blocks, a.field(), n));
    Subspace full = intersect(left, right);
    return {std::move(left), std::move(right), std::move(full)};
}

Annihilators annihilators(const Algebra& a, const Subspace& m, const Subspace& h) {
    std::size_t n = a.dim();
    if (m.ambient_dim() != n || h.ambient_dim() != n)
        throw AmbientMismatch("annihilator arguments must live in the algebra");
    std::vector<Matrix> left_blocks, right_blocks;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Vector b = m.basis_row(r);
        left_blocks.push_back(left_action_on(a, b));
        right_blocks.push_back(right_action_on(a, b));
    }
    Subspace left = m.dim() == 0 ? Subspace::full(a.field(), n)
                                 : nullspace(stack(left_blocks, a.field(), n));
    Subspace right = m.dim() == 0 ? Subspace::full(a.field(), n)
                                  : nullspace(stack(right_blocks, a.field(), n));
    left = intersect(left, h);
    right = intersect(right, h);
    Subspace full = intersect(left, right);
    return {std::move(left), std::move(right), std::move(full)};
}

// --------------------------------------------------------------- closure

SubalgebraHandle generated_subalgebra(const Algebra& a, const std::vector<Vector>& gens) {
    Subspace s = Subspace::span(a.field(), a.dim(), gens);
    while (true) {
        Subspace next = s;
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j)
                next = next.extended(a.bracket(s.basis_row(i), s.basis_row(j)));
        if (next == s) break;
        s = next;
    }
    return {&a, s, true};
}

SubalgebraHandle close_span(const Algebra& a, const Subspace& s) {
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(s.basis_row(r));
    return generated_subalgebra(a, gens);
}

// --------------------------------------------------------------- ideals

namespace {
void require_closed(const SubalgebraHandle& s) {
    if (!s.closed) throw NotClosed("operation requires a bracket-closed subalgebra");
}
}  // namespace

bool is_left_ideal(const Algebra& a, const SubalgebraHandle& s) {
    require_closed(s);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector ei = Vector::unit(a.field(), a.dim(), i);
        for (std::size_t r = 0; r < s.space.dim(); ++r)
            if (!s.space.contains(a.bracket(ei, s.space.basis_row(r)))) return false;
    }
    return true;
}

bool is_ideal(const Algebra& a, const SubalgebraHandle& s) {
    require_closed(s);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector ei = Vector::unit(a.field(), a.dim(), i);
        for (std::size_t r = 0; r < s.space.dim(); ++r) {
            Vector b = s.space.basis_row(r);
            if (!s.space.contains(a.bracket(ei, b))) return false;
            if (!s.space.contains(a.bracket(b, ei))) return false;
        }
    }
    return true;
}

Subspace idealizer(const Algebra& a, const SubalgebraHandle& s, IdealizerSide side) {
    require_closed(s);
    std::size_t n = a.dim();
    const Subspace& sp = s.space;
    if (sp.dim() == n) return sp;  // the whole algebra idealizes itself

    // residual map: v -> v - sum_r v[p_r] * basis_r; kernel is exactly sp
    Matrix residual = Matrix::identity(a.field(), n);
    for (std::size_t r = 0; r < sp.dim(); ++r) {
        std::size_t p = sp.pivots()[r];
        for (std::size_t k = 0; k < n; ++k)
            residual.at(k, p) = residual.at(k, p) - sp.basis().at(r, k);
    }

    std::vector<Matrix> blocks;
    for (std::size_t r = 0; r < sp.dim(); ++r) {
        Vector b = sp.basis_row(r);
        if (side != IdealizerSide::Right) blocks.push_back(residual * left_action_on(a, b));
        if (side != IdealizerSide::Left) blocks.push_back(residual * right_action_on(a, b));
    }
    if (blocks.empty()) return Subspace::full(a.field(), n);  // idealizer of 0 is L
    Subspace result = nullspace(stack(blocks, a.field(), n));

    if (side == IdealizerSide::Full) {
        // postconditions: contains s and is itself a subalgebra
        if (!result.contains(sp)) throw RadicalInconsistent("idealizer does not contain its argument");
        if (!is_bracket_closed(a, result))
            throw RadicalInconsistent("idealizer is not bracket-closed");
    }
    return result;
}

std::vector<Subspace> upper_idealizer_series(const Algebra& a, const SubalgebraHandle& s) {
    require_closed(s);
    std::vector<Subspace> series{s.space};
    while (true) {
        SubalgebraHandle current{&a, series.back(), true};
        Subspace next = idealizer(a, current);
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Ideal: return "Ideal";
        case Verdict::SelfIdealizing: return "SelfIdealizing";
        case Verdict::Neither: return "Neither";
    }
    return "?";
}

Classification classify_subalgebra(const Algebra& a, const SubalgebraHandle& s) {
    require_closed(s);
    if (is_ideal(a, s)) return {Verdict::Ideal, std::nullopt, std::nullopt};
    Subspace ide = idealizer(a, s);
    if (ide == s.space) return {Verdict::SelfIdealizing, std::nullopt, std::nullopt};

    Classification result;
    result.verdict = Verdict::Neither;
    for (std::size_t r = 0; r < ide.dim(); ++r)
        if (!s.space.contains(ide.basis_row(r))) {
            result.idealizer_witness = ide.basis_row(r);
            break;
        }
    for (std::size_t r = 0; r < s.space.dim() && !result.non_ideal_witness; ++r) {
        Vector b = s.space.basis_row(r);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector ei = Vector::unit(a.field(), a.dim(), i);
            if (!s.space.contains(a.bracket(ei, b)) || !s.space.contains(a.bracket(b, ei))) {
                result.non_ideal_witness = std::pair{b, ei};
                break;
            }
        }
    }
    return result;
}

// --------------------------------------------------------------- series

Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& w) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            gens.push_back(a.bracket(u.basis_row(i), w.basis_row(j)));
    return Subspace::span(a.field(), a.dim(), gens);
}

std::vector<Subspace> central_series(const Algebra& a, const Subspace& within) {
    std::vector<Subspace> series{within};
    while (true) {
        const Subspace& current = series.back();
        Subspace next = bracket_span(a, within, current) + bracket_span(a, current, within);
        if (next == current) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

std::vector<Subspace> central_series(const Algebra& a) {
    return central_series(a, Subspace::full(a.field(), a.dim()));
}

bool is_nilpotent(const Algebra& a, const Subspace& within) {
    return central_series(a, within).back().dim() == 0;
}

bool is_nilpotent(const Algebra& a) {
    return is_nilpotent(a, Subspace::full(a.field(), a.dim()));
}

// --------------------------------------------------------------- quotient

Algebra quotient(const Algebra& a, const SubalgebraHandle& ideal) {
    if (!is_ideal(a, ideal)) throw NotAnIdeal("quotient requires a two-sided ideal");
    std::size_t n = a.dim();
    const Subspace& sp = ideal.space;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : sp.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> reps;  // non-pivot coordinates act as coset representatives
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) reps.push_back(i);

    std::vector<std::string> names;
    for (std::size_t r : reps) names.push_back(a.basis_names()[r]);
    Algebra q(a.field(), names, a.name().empty() ? "" : a.name() + "/I");
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            Vector w = sp.reduce(a.bracket_basis(reps[i], reps[j]));
            Vector img = Vector::zero(a.field(), reps.size());
            for (std::size_t k = 0; k < reps.size(); ++k) img[k] = w[reps[k]];
            q.set_bracket(i, j, img);
        }
    return q;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct sum requires equal fields");
    std::vector<std::string> names = a.basis_names();
    for (const auto& nm : b.basis_names()) {
        std::string candidate = nm;
        while (std::find(names.begin(), names.end(), candidate) != names.end())
            candidate += "'";
        names.push_back(candidate);
    }
    Algebra s(a.field(), names,
              a.name().empty() && b.name().empty() ? "" : a.name() + "+" + b.name());
    std::size_t na = a.dim();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k)
                s.set_tensor_entry(i, j, k, a.tensor(i, j, k));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                s.set_tensor_entry(na + i, na + j, na + k, b.tensor(i, j, k));
    return s;
}

// --------------------------------------------------------------- actions

std::optional<std::pair<Scalar, Scalar>> analyze_action(const Algebra& a, const Vector& x,
                                                        const Subspace& A) {
    if (A.dim() == 0) throw DimensionMismatch("analyze_action requires a nonzero subspace");
    std::optional<Scalar> lambda, rho;
    for (std::size_t r = 0; r < A.dim(); ++r) {
        Vector b = A.basis_row(r);
        std::size_t p = A.pivots()[r];  // b[p] = 1
        Vector xb = a.bracket(x, b);
        Vector bx = a.bracket(b, x);
        Scalar cand_l = xb[p];
        Scalar cand_r = bx[p];
        if (!(xb == cand_l * b) || !(bx == cand_r * b)) return std::nullopt;
        if (lambda && !(*lambda == cand_l)) return std::nullopt;
        if (rho && !(*rho == cand_r)) return std::nullopt;
        lambda = cand_l;
        rho = cand_r;
    }
    return std::pair{*lambda, *rho};
}

}  // namespace leibniz
