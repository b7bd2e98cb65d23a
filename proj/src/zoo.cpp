#include "leibniz/zoo.hpp"

#include "leibniz/latticescan.hpp"

namespace leibniz {

namespace {

void require_char2(const FieldSpec& f, const char* who) {
    if (f.characteristic() != 2)
        throw ParseError(std::string(who) + " requires a field of characteristic 2");
}

void assert_valid(const Algebra& a) {
    // every table below comes from a verified bracket table; a violation here
    // is a constructor bug, not bad user input
    if (!check_left_leibniz(a).pass)
        throw std::logic_error("constructor produced an invalid Leibniz table: " + a.name());
}

}  // namespace

Algebra build_cyclic_dim2(const FieldSpec& f) {
    Algebra a(f, {"a1", "a2"}, "cyclic2_" + f.description());
    a.set_tensor_entry(0, 0, 1, Scalar::one(f));  // [a1,a1] = a2
    assert_valid(a);
    return a;
}

Algebra build_theorem_A(const FieldSpec& f, std::size_t m, const Scalar& sigma) {
    if (m < 2) throw DimTooSmall("theorem-a requires dim(A) >= 2 (A not cyclic)");
    if (sigma.is_zero()) throw SigmaZero();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("w");
    Algebra a(f, names, "theoremA_m" + std::to_string(m) + "_" + f.description());
    for (std::size_t i = 0; i < m; ++i) {
        Vector img = Vector::zero(f, m + 1);
        img[i] = sigma;
        a.set_bracket(m, i, img);  // [w, a_i] = sigma a_i
    }
    assert_valid(a);
    return a;
}

Algebra build_example_3_10(const FieldSpec& f, const Scalar& eta) {
    require_char2(f, "example-3-10");
    if (quadratic_has_root(Scalar::zero(f), eta) == Tri::Yes)
        throw RootExists("X^2 + eta has a root in " + f.description() +
                         " (the field is 2-closed or eta is a square); try GF(2)(t)");
    Algebra a(f, {"z", "a", "v"}, "example310_" + f.description());
    Scalar one = Scalar::one(f);
    a.set_tensor_entry(1, 1, 0, one);  // [a,a] = z
    a.set_tensor_entry(2, 2, 0, eta);  // [v,v] = eta z
    a.set_tensor_entry(2, 1, 1, one);  // [v,a] = a
    a.set_tensor_entry(1, 2, 1, one);  // [a,v] = a
    assert_valid(a);
    return a;
}

Algebra build_example_3_8(const FieldSpec& f, const Scalar& sigma, const Scalar& eta) {
    require_char2(f, "example-3-8");
    if (quadratic_has_root(Scalar::zero(f), sigma) == Tri::Yes)
        throw RootExists("X^2 + sigma has a root in " + f.description());
    if (quadratic_has_root(Scalar::zero(f), eta) == Tri::Yes)
        throw RootExists("X^2 + eta has a root in " + f.description());
    Algebra a(f, {"z", "a", "b", "v"}, "example38_" + f.description());
    Scalar one = Scalar::one(f);
    a.set_tensor_entry(1, 1, 0, one);    // [a,a] = z
    a.set_tensor_entry(2, 2, 0, sigma);  // [b,b] = sigma z
    a.set_tensor_entry(3, 3, 0, eta);    // [v,v] = eta z
    // In characteristic 2 the identity on (x,v,v) forces the z-offsets of
    // [x,v] and [v,x] to agree, so both carry the +z term.
    a.set_tensor_entry(1, 3, 1, one);    // [a,v] = a + z
    a.set_tensor_entry(1, 3, 0, one);
    a.set_tensor_entry(3, 1, 1, one);    // [v,a] = a + z
    a.set_tensor_entry(3, 1, 0, one);
    a.set_tensor_entry(2, 3, 2, one);    // [b,v] = b + z
    a.set_tensor_entry(2, 3, 0, one);
    a.set_tensor_entry(3, 2, 2, one);    // [v,b] = b + z
    a.set_tensor_entry(3, 2, 0, one);
    assert_valid(a);
    return a;
}

Algebra build_theorem_C(const FieldSpec& f, const Scalar& eta, const Scalar& lambda,
                        const Scalar& mu) {
    require_char2(f, "theorem-c");
    if (!(mu + lambda).is_zero())
        throw IdentityFailed(
            "the identity on (a,v,v) forces lambda = mu in characteristic 2; "
            "the requested table is not a left Leibniz algebra");
    Tri root = quadratic_has_root(mu + lambda, eta);
    if (root == Tri::Yes)
        throw RootExists("X^2 + (mu+lambda)X + eta has a root in " + f.description());
    if (root == Tri::Unknown)
        throw RootUnknown("root search for X^2 + (mu+lambda)X + eta was inconclusive; refusing to build");
    Algebra a(f, {"z", "a", "v"}, "theoremC_" + f.description());
    Scalar one = Scalar::one(f);
    a.set_tensor_entry(1, 1, 0, one);     // [a,a] = z
    a.set_tensor_entry(2, 2, 0, eta);     // [v,v] = eta z
    a.set_tensor_entry(2, 1, 1, one);     // [v,a] = a + lambda z
    a.set_tensor_entry(2, 1, 0, lambda);
    a.set_tensor_entry(1, 2, 1, one);     // [a,v] = a + mu z
    a.set_tensor_entry(1, 2, 0, mu);
    assert_valid(a);
    return a;
}

Algebra build_heisenberg(const FieldSpec& f) {
    Algebra a(f, {"x", "y", "z"}, "heisenberg_" + f.description());
    a.set_tensor_entry(0, 1, 2, Scalar::one(f));   // [x,y] = z
    a.set_tensor_entry(1, 0, 2, -Scalar::one(f));  // [y,x] = -z
    assert_valid(a);
    return a;
}

// ------------------------------------------------------------ extraspecial

namespace {

// Searches for a nonzero alpha with sum_i squares_i alpha_i^2 = 0.
std::optional<std::vector<Scalar>> isotropic_vector(const FieldSpec& f,
                                                    const std::vector<Scalar>& squares) {
    std::size_t m = squares.size();
    for (std::size_t i = 0; i < m; ++i)
        if (squares[i].is_zero()) {
            std::vector<Scalar> w(m, Scalar::zero(f));
            w[i] = Scalar::one(f);
            return w;
        }

    if (f.kind == FieldKind::Prime) {
        // exhaustive scan over nonzero coefficient vectors
        std::vector<std::int64_t> odo(m, 0);
        while (true) {
            bool carry = true;
            for (std::size_t i = m; i-- > 0;) {
                if (++odo[i] < f.p) { carry = false; break; }
                odo[i] = 0;
            }
            if (carry) break;
            Scalar q = Scalar::zero(f);
            for (std::size_t i = 0; i < m; ++i) {
                Scalar c = Scalar::from_integer(f, odo[i]);
                q = q + squares[i] * c * c;
            }
            if (q.is_zero()) {
                std::vector<Scalar> w;
                for (std::size_t i = 0; i < m; ++i) w.push_back(Scalar::from_integer(f, odo[i]));
                return w;
            }
        }
        return std::nullopt;
    }

    if (f.kind == FieldKind::Rationals) {
        // definite diagonal forms are anisotropic
        bool all_pos = true, all_neg = true;
        for (const Scalar& s : squares) {
            if (s.numerator() > 0) all_neg = false;
            if (s.numerator() < 0) all_pos = false;
        }
        if (all_pos || all_neg) return std::nullopt;
        // indefinite: small grid search only
        std::vector<Scalar> grid;
        for (std::int64_t v : {-3, -2, -1, 0, 1, 2, 3}) grid.push_back(Scalar::from_integer(f, v));
        std::vector<std::size_t> odo(m, 0);
        while (true) {
            Scalar q = Scalar::zero(f);
            bool nonzero = false;
            for (std::size_t i = 0; i < m; ++i) {
                if (!grid[odo[i]].is_zero()) nonzero = true;
                q = q + squares[i] * grid[odo[i]] * grid[odo[i]];
            }
            if (nonzero && q.is_zero()) {
                std::vector<Scalar> w;
                for (std::size_t i = 0; i < m; ++i) w.push_back(grid[odo[i]]);
                return w;
            }
            bool carry = true;
            for (std::size_t i = m; i-- > 0;) {
                if (++odo[i] < grid.size()) { carry = false; break; }
                odo[i] = 0;
            }
            if (carry) break;
        }
        return std::nullopt;
    }

    // GF(2)(t): pairwise ratios give an exact test (char 2:
    // s_i a_i^2 = s_j a_j^2 iff s_j/s_i is a square), covering m <= 2
    // completely; a degree-bounded grid catches longer dependencies.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (is_square(squares[j] / squares[i])) {
                // (s_j/s_i) = r^2: witness alpha_i = r, alpha_j = 1
                Scalar ratio = squares[j] / squares[i];
                const GfPoly& num = ratio.poly_numerator();
                const GfPoly& den = ratio.poly_denominator();
                auto poly_sqrt = [](const GfPoly& poly) {
                    GfPoly r{poly.p, {}};
                    for (std::size_t d = 0; d < poly.c.size(); d += 2)
                        if (poly.c[d] != 0) {
                            r.c.resize(d / 2 + 1, 0);
                            r.c[d / 2] = poly.c[d];
                        }
                    return r;
                };
                std::vector<Scalar> w(m, Scalar::zero(f));
                w[i] = Scalar::function(f, poly_sqrt(num), poly_sqrt(den));
                w[j] = Scalar::one(f);
                return w;
            }
    std::vector<Scalar> grid = default_sample_set(f, 2);
    std::vector<std::size_t> odo(m, 0);
    while (true) {
        Scalar q = Scalar::zero(f);
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (!grid[odo[i]].is_zero()) nonzero = true;
            q = q + squares[i] * grid[odo[i]] * grid[odo[i]];
        }
        if (nonzero && q.is_zero()) {
            std::vector<Scalar> w;
            for (std::size_t i = 0; i < m; ++i) w.push_back(grid[odo[i]]);
            return w;
        }
        bool carry = true;
        for (std::size_t i = m; i-- > 0;) {
            if (++odo[i] < grid.size()) { carry = false; break; }
            odo[i] = 0;
        }
        if (carry) break;
    }
    return std::nullopt;
}

}  // namespace

Algebra build_strong_extraspecial(const FieldSpec& f, std::size_t m,
                                  const std::vector<Scalar>& squares) {
    if (m < 1) throw DimTooSmall("extraspecial requires m >= 1");
    if (squares.size() != m) throw DimensionMismatch("need one square per generator");
    if (auto witness = isotropic_vector(f, squares)) {
        std::string desc;
        for (std::size_t i = 0; i < m; ++i) {
            if (i) desc += ",";
            desc += (*witness)[i].to_string();
        }
        throw NotStrong("isotropic vector (" + desc + "): its square bracket vanishes off the center");
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("z");
    Algebra a(f, names, "extraspecial_m" + std::to_string(m) + "_" + f.description());
    for (std::size_t i = 0; i < m; ++i) a.set_tensor_entry(i, i, m, squares[i]);
    assert_valid(a);
    // extraspecial invariants: center is exactly <z>, central quotient abelian
    Centers c = centers(a);
    Subspace zline = Subspace::span(f, m + 1, {Vector::unit(f, m + 1, m)});
    if (!(c.full == zline))
        throw std::logic_error("extraspecial construction: center is not <z>");
    return a;
}

// ------------------------------------------------------------ B family

BFamilyResult build_B1(const FieldSpec& f, const B1Params& params) {
    require_char2(f, "b1");
    if (params.eta.is_zero()) throw ParseError("b1 requires a non-zero eta");
    Algebra core = build_strong_extraspecial(f, params.squares.size(), params.squares);
    std::size_t m = params.squares.size();
    std::vector<std::string> names = core.basis_names();  // x1..xm, z
    names.push_back("v");
    std::size_t zi = m, vi = m + 1;
    Algebra a(f, names, "b1_m" + std::to_string(m) + "_" + f.description());
    for (std::size_t i = 0; i < m; ++i) a.set_tensor_entry(i, i, zi, params.squares[i]);
    a.set_tensor_entry(vi, vi, zi, params.eta);  // [v,v] = eta z
    Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < m; ++i) {
        Scalar xi = i < params.xi.size() ? params.xi[i] : Scalar::zero(f);
        a.set_tensor_entry(vi, i, i, one);   // [v,x_i] = x_i + xi_i z
        a.set_tensor_entry(vi, i, zi, xi);
        a.set_tensor_entry(i, vi, i, one);   // [x_i,v] = x_i
    }
    return {a, check_left_leibniz(a)};
}

BFamilyResult build_B2(const FieldSpec& f, const B2Params& params) {
    if (f.characteristic() == 2) throw ParseError("b2 requires characteristic != 2");
    Algebra core = [&] {
        try {
            return build_strong_extraspecial(f, params.squares.size(), params.squares);
        } catch (const NotStrong& e) {
            throw NotAnisotropic(e.what());
        }
    }();
    std::size_t m = params.squares.size();
    std::vector<std::string> names = core.basis_names();
    names.push_back("v");
    std::size_t zi = m, vi = m + 1;
    Algebra a(f, names, "b2_m" + std::to_string(m) + "_" + f.description());
    for (std::size_t i = 0; i < m; ++i) a.set_tensor_entry(i, i, zi, params.squares[i]);
    a.set_tensor_entry(vi, vi, zi, params.nu);   // [v,v] = nu z (nu may be zero)
    a.set_tensor_entry(vi, zi, zi, Scalar::from_integer(f, 2));  // [v,z] = 2z
    Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < m; ++i) {
        Scalar xi = i < params.xi.size() ? params.xi[i] : Scalar::zero(f);
        Scalar xr = i < params.xi_right.size() ? params.xi_right[i] : Scalar::zero(f);
        a.set_tensor_entry(vi, i, i, one);    // [v,x_i] = x_i + xi_i z
        a.set_tensor_entry(vi, i, zi, xi);
        a.set_tensor_entry(i, vi, i, one);    // [x_i,v] = x_i + xi_right_i z
        a.set_tensor_entry(i, vi, zi, xr);
    }
    return {a, check_left_leibniz(a)};
}

}  // namespace leibniz
