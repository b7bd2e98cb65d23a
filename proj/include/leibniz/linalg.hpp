#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Coordinate vector over a FieldSpec.
class Vector {
public:
    Vector() = default;
    Vector(FieldSpec field, std::vector<Scalar> coords);
    static Vector zero(const FieldSpec& f, std::size_t n);
    static Vector unit(const FieldSpec& f, std::size_t n, std::size_t i);

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }
    bool is_zero() const;

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Scalar& c, const Vector& v);

    bool operator==(const Vector&) const = default;

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Scalar> coords_;
};

/// Dense rectangular matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector apply(const Vector& v) const;  // matrix * column vector

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;                 // zero rows removed
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; pivoting on the first nonzero entry.
RrefResult rref(const Matrix& m);

/// Canonical subspace of coordinate n-space: RREF basis with no zero rows.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace from_matrix(const Matrix& rows);  // canonicalizes

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_row(std::size_t r) const { return basis_.row(r); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Residual of v after elimination against the RREF basis; zero iff contained.
    Vector reduce(const Vector& v) const;
    /// Smallest subspace containing this and v.
    Subspace extended(const Vector& v) const;

    bool operator==(const Subspace&) const = default;

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// {v : m v = 0} as a canonical subspace of cols(m)-space.
Subspace nullspace(const Matrix& m);

/// Deterministic strict ordering (by dimension, then entry-wise), used to pick
/// canonical first counterexamples.
bool subspace_less(const Subspace& a, const Subspace& b);
bool scalar_less(const Scalar& a, const Scalar& b);

std::string format_vector(const Vector& v);
std::string format_subspace(const Subspace& s);
/// Parses "1,0,0;0,1,0" (semicolon-separated rows of comma-separated scalars).
Subspace parse_subspace(const FieldSpec& f, std::size_t ambient, const std::string& text);

}  // namespace leibniz
