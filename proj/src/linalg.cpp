#include "leibniz/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz {

// ---------------------------------------------------------------- Vector

Vector::Vector(FieldSpec field, std::vector<Scalar> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (c.field() != field_) throw FieldMismatch("vector entry field differs from vector field");
}

Vector Vector::zero(const FieldSpec& f, std::size_t n) {
    return Vector(f, std::vector<Scalar>(n, Scalar::zero(f)));
}

Vector Vector::unit(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vector v = zero(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector r = v;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * v[i];
    return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(field_)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    std::vector<Scalar> coords(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return Vector(field_, std::move(coords));
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector r = Vector::zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape");
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix diff shape");
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

// ---------------------------------------------------------------- rref

RrefResult rref(const Matrix& m) {
    Matrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        // first nonzero entry in this column at or below pivot_row
        std::size_t sel = pivot_row;
        while (sel < w.rows() && w.at(sel, col).is_zero()) ++sel;
        if (sel == w.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < w.cols(); ++c)
                std::swap(w.at(sel, c), w.at(pivot_row, c));
        Scalar inv = w.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < w.cols(); ++c)
            w.at(pivot_row, c) = inv * w.at(pivot_row, c);
        for (std::size_t r = 0; r < w.rows(); ++r) {
            if (r == pivot_row || w.at(r, col).is_zero()) continue;
            Scalar factor = w.at(r, col);
            for (std::size_t c = col; c < w.cols(); ++c)
                w.at(r, c) = w.at(r, c) - factor * w.at(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    Matrix reduced(m.field(), pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced.at(r, c) = w.at(r, c);
    return {std::move(reduced), std::move(pivots)};
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    return from_matrix(Matrix::identity(f, ambient));
}

Subspace Subspace::from_matrix(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.field_ = rows.field();
    s.ambient_ = rows.cols();
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vectors) {
    Matrix m(f, vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw AmbientMismatch("span vector has wrong length");
        for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = vectors[r][c];
    }
    return from_matrix(m);
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
    Vector r = v;
    for (std::size_t row = 0; row < basis_.rows(); ++row) {
        const Scalar& coeff = r[pivots_[row]];
        if (coeff.is_zero()) continue;
        Scalar c = coeff;  // copy before overwriting
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = r[j] - c * basis_.at(row, j);
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_) throw AmbientMismatch("ambient dimensions differ");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_row(r))) return false;
    return true;
}

Subspace Subspace::extended(const Vector& v) const {
    Vector residual = reduce(v);
    if (residual.is_zero()) return *this;
    Matrix m(field_, dim() + 1, ambient_);
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = basis_.at(r, c);
    for (std::size_t c = 0; c < ambient_; ++c) m.at(dim(), c) = residual[c];
    return from_matrix(m);
}

Subspace operator+(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || u.field() != w.field())
        throw AmbientMismatch("subspace sum requires equal ambient space");
    Matrix m(u.field(), u.dim() + w.dim(), u.ambient_dim());
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < u.ambient_dim(); ++c) m.at(r, c) = u.basis().at(r, c);
    for (std::size_t r = 0; r < w.dim(); ++r)
        for (std::size_t c = 0; c < u.ambient_dim(); ++c) m.at(u.dim() + r, c) = w.basis().at(r, c);
    return Subspace::from_matrix(m);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || u.field() != w.field())
        throw AmbientMismatch("subspace intersection requires equal ambient space");
    const FieldSpec& f = u.field();
    std::size_t n = u.ambient_dim();
    // solve sum_i a_i u_i - sum_j b_j w_j = 0; columns: u basis then w basis
    Matrix sys(f, n, u.dim() + w.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) sys.at(r, i) = u.basis().at(i, r);
    for (std::size_t j = 0; j < w.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) sys.at(r, u.dim() + j) = -w.basis().at(j, r);
    Subspace kernel = nullspace(sys);
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < kernel.dim(); ++k) {
        Vector coeffs = kernel.basis_row(k);
        Vector v = Vector::zero(f, n);
        for (std::size_t i = 0; i < u.dim(); ++i) v = v + coeffs[i] * u.basis_row(i);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, n, gens);
}

Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    const FieldSpec& f = m.field();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v = Vector::zero(f, n);
        v[free_col] = Scalar::one(f);
        for (std::size_t row = 0; row < r.pivots.size(); ++row)
            v[r.pivots[row]] = -r.reduced.at(row, free_col);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

// ---------------------------------------------------------------- ordering

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a == b) return false;
    switch (a.field().kind) {
        case FieldKind::Prime:
            return a.residue_value() < b.residue_value();
        case FieldKind::Rationals:
            return a.numerator() * b.denominator() < b.numerator() * a.denominator();
        case FieldKind::RationalFunction: {
            auto poly_less = [](const GfPoly& x, const GfPoly& y) {
                if (x.degree() != y.degree()) return x.degree() < y.degree();
                for (int i = x.degree(); i >= 0; --i) {
                    auto idx = static_cast<std::size_t>(i);
                    if (x.c[idx] != y.c[idx]) return x.c[idx] < y.c[idx];
                }
                return false;
            };
            if (a.poly_denominator() != b.poly_denominator())
                return poly_less(a.poly_denominator(), b.poly_denominator());
            return poly_less(a.poly_numerator(), b.poly_numerator());
        }
    }
    return false;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
            if (a.basis().at(r, c) == b.basis().at(r, c)) continue;
            return scalar_less(a.basis().at(r, c), b.basis().at(r, c));
        }
    return false;
}

// ---------------------------------------------------------------- text I/O

std::string format_vector(const Vector& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i].to_string();
    }
    return out.str();
}

std::string format_subspace(const Subspace& s) {
    if (s.dim() == 0) return "0";
    std::ostringstream out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out << ";";
        out << format_vector(s.basis_row(r));
    }
    return out.str();
}

Subspace parse_subspace(const FieldSpec& f, std::size_t ambient, const std::string& text) {
    std::vector<Vector> rows;
    std::stringstream stream(text);
    std::string row_text;
    while (std::getline(stream, row_text, ';')) {
        if (row_text.empty()) continue;
        std::vector<Scalar> coords;
        std::stringstream row_stream(row_text);
        std::string entry;
        while (std::getline(row_stream, entry, ',')) coords.push_back(Scalar::parse(f, entry));
        if (coords.size() != ambient)
            throw ParseError("subspace row has " + std::to_string(coords.size()) +
                             " entries, expected " + std::to_string(ambient));
        rows.emplace_back(f, std::move(coords));
    }
    return Subspace::span(f, ambient, rows);
}

}  // namespace leibniz
