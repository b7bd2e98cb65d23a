#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Finite-dimensional left Leibniz algebra given by a structure-constant
/// tensor: [e_i, e_j] = sum_k tensor(i,j,k) e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(FieldSpec field, std::vector<std::string> basis_names, std::string name = {});

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    const Scalar& tensor(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    void set_bracket(std::size_t i, std::size_t j, const Vector& value);
    void set_tensor_entry(std::size_t i, std::size_t j, std::size_t k, Scalar value);

    Vector bracket_basis(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    std::optional<std::size_t> basis_index(const std::string& name) const;

    bool operator==(const Algebra&) const = default;

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t dim_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<Scalar> tensor_;
    std::string name_;
};

/// A bracket-closed subspace of a fixed algebra.
struct SubalgebraHandle {
    const Algebra* algebra = nullptr;
    Subspace space;
    bool closed = false;
};

/// Verifies closure of the span; throws NotClosed if a bracket escapes.
SubalgebraHandle make_subalgebra(const Algebra& a, const Subspace& s);
bool is_bracket_closed(const Algebra& a, const Subspace& s);

struct LeibnizCheck {
    bool pass = true;
    std::vector<std::array<std::size_t, 3>> violations;  // lexicographic (i,j,k)
};

/// Checks [[e_i,e_j],e_k] = [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]] on all triples.
LeibnizCheck check_left_leibniz(const Algebra& a);

bool is_lie(const Algebra& a);

Subspace leibniz_kernel(const Algebra& a);

struct Centers {
    Subspace left, right, full;
};
Centers centers(const Algebra& a);

struct Annihilators {
    Subspace left, right, full;
};
/// Annihilators of m inside h.
Annihilators annihilators(const Algebra& a, const Subspace& m, const Subspace& h);

/// Smallest bracket-closed subspace containing the generators.
SubalgebraHandle generated_subalgebra(const Algebra& a, const std::vector<Vector>& gens);
SubalgebraHandle close_span(const Algebra& a, const Subspace& s);

bool is_ideal(const Algebra& a, const SubalgebraHandle& s);
bool is_left_ideal(const Algebra& a, const SubalgebraHandle& s);

enum class IdealizerSide { Left, Right, Full };
Subspace idealizer(const Algebra& a, const SubalgebraHandle& s,
                   IdealizerSide side = IdealizerSide::Full);

std::vector<Subspace> upper_idealizer_series(const Algebra& a, const SubalgebraHandle& s);

enum class Verdict { Ideal, SelfIdealizing, Neither };
std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Ideal;
    /// Neither: element of the idealizer outside S.
    std::optional<Vector> idealizer_witness;
    /// Not an ideal: pair (s, y), s in S, y basis vector, with [s,y] or [y,s] outside S.
    std::optional<std::pair<Vector, Vector>> non_ideal_witness;
};

Classification classify_subalgebra(const Algebra& a, const SubalgebraHandle& s);

/// Descending series C_1 = S, C_{k+1} = [S, C_k] + [C_k, S], until it
/// stabilizes; nilpotent iff it reaches zero.
std::vector<Subspace> central_series(const Algebra& a, const Subspace& within);
std::vector<Subspace> central_series(const Algebra& a);
bool is_nilpotent(const Algebra& a, const Subspace& within);
bool is_nilpotent(const Algebra& a);

/// Span of all brackets [U, W].
Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& w);

Algebra quotient(const Algebra& a, const SubalgebraHandle& ideal);
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// (lambda, rho) with [x,b] = lambda b and [b,x] = rho b for every basis row b
/// of A, when such scalars exist.
std::optional<std::pair<Scalar, Scalar>> analyze_action(const Algebra& a, const Vector& x,
                                                        const Subspace& A);

/// Left multiplication x -> [x, -] as a matrix (columns are images of e_j).
Matrix left_multiplication(const Algebra& a, const Vector& x);

}  // namespace leibniz
