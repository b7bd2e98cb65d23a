#include "leibniz/latticescan.hpp"

#include <algorithm>
#include <set>

namespace leibniz {

unsigned long long gaussian_binomial(unsigned long long n, unsigned long long k,
                                     unsigned long long q) {
    if (k > n) return 0;
    // [n k]_q = prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1), computed as a
    // running exact quotient
    unsigned long long num = 1, den = 1;
    auto power = [](unsigned long long base, unsigned long long exp) {
        unsigned long long acc = 1;
        while (exp--) acc *= base;
        return acc;
    };
    for (unsigned long long i = 0; i < k; ++i) {
        num *= power(q, n - i) - 1;
        den *= power(q, i + 1) - 1;
    }
    return num / den;
}

std::vector<Scalar> default_sample_set(const FieldSpec& f, int max_degree) {
    std::vector<Scalar> set;
    switch (f.kind) {
        case FieldKind::Prime:
            for (std::int64_t v = 0; v < f.p; ++v) set.push_back(Scalar::from_integer(f, v));
            break;
        case FieldKind::Rationals:
            for (std::int64_t v : {0, 1, -1, 2, -2})
                set.push_back(Scalar::from_integer(f, v));
            set.push_back(Scalar::rational(1, 2));
            break;
        case FieldKind::RationalFunction: {
            // all numerator polynomials of degree <= max_degree, denominator 1
            std::size_t count = std::size_t{1};
            for (int i = 0; i <= max_degree; ++i) count *= static_cast<std::size_t>(f.p);
            for (std::size_t bits = 0; bits < count; ++bits) {
                GfPoly poly{f.p, {}};
                std::size_t rest = bits;
                for (int d = 0; d <= max_degree; ++d) {
                    std::int64_t coeff = static_cast<std::int64_t>(rest % static_cast<std::size_t>(f.p));
                    rest /= static_cast<std::size_t>(f.p);
                    if (coeff != 0) {
                        poly.c.resize(static_cast<std::size_t>(d) + 1, 0);
                        poly.c[static_cast<std::size_t>(d)] = coeff;
                    }
                }
                set.push_back(Scalar::function(f, poly, GfPoly::constant(f.p, 1)));
            }
            break;
        }
    }
    return set;
}

// ------------------------------------------------------------ enumeration

namespace {

// free (row, col) positions of the RREF pattern with the given pivot columns
std::vector<std::pair<std::size_t, std::size_t>> free_positions(
    const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free.emplace_back(r, c);
    return free;
}

}  // namespace

void enumerate_subspaces(const FieldSpec& f, std::size_t n, std::optional<std::size_t> dim,
                         std::size_t max_subspaces,
                         const std::function<bool(const Subspace&)>& visit) {
    if (f.kind != FieldKind::Prime)
        throw Unsupported("exhaustive subspace enumeration requires a prime field");
    std::size_t count = 0;
    std::size_t kmin = dim.value_or(0), kmax = dim.value_or(n);
    for (std::size_t k = kmin; k <= kmax; ++k) {
        // pivot sets: k-combinations of [0, n) in lexicographic order
        std::vector<std::size_t> pivots(k);
        for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
        bool more_sets = true;
        while (more_sets) {
            auto free = free_positions(pivots, n);
            std::vector<std::int64_t> values(free.size(), 0);
            bool more_values = true;
            while (more_values) {
                if (++count > max_subspaces)
                    throw BudgetExceeded("subspace enumeration exceeded " +
                                         std::to_string(max_subspaces));
                Matrix basis(f, k, n);
                for (std::size_t r = 0; r < k; ++r)
                    basis.at(r, pivots[r]) = Scalar::one(f);
                for (std::size_t i = 0; i < free.size(); ++i)
                    basis.at(free[i].first, free[i].second) =
                        Scalar::from_integer(f, values[i]);
                Subspace s = Subspace::from_matrix(basis);
                if (!visit(s)) return;
                // odometer, last position fastest
                more_values = false;
                for (std::size_t i = values.size(); i-- > 0;) {
                    if (++values[i] < f.p) { more_values = true; break; }
                    values[i] = 0;
                }
            }
            // next k-combination
            more_sets = false;
            for (std::size_t i = k; i-- > 0;) {
                if (pivots[i] < n - (k - i)) {
                    ++pivots[i];
                    for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                    more_sets = true;
                    break;
                }
            }
            if (k == 0) break;  // single empty pivot set
        }
    }
}

std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n,
                                    std::optional<std::size_t> dim, std::size_t max_subspaces) {
    std::vector<Subspace> out;
    enumerate_subspaces(f, n, dim, max_subspaces, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

void check_exhaustive_budget(const Algebra& a, const ScanBudget& budget) {
    if (a.field().kind != FieldKind::Prime)
        throw Unsupported("exhaustive scan requires a prime field");
    double states = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) states *= static_cast<double>(a.field().p);
    if (states > static_cast<double>(budget.max_states))
        throw BudgetExceeded("q^n exceeds the state guard");
}

}  // namespace

std::vector<SubalgebraHandle> enumerate_subalgebras(const Algebra& a, const ScanBudget& budget) {
    check_exhaustive_budget(a, budget);
    std::vector<SubalgebraHandle> out;
    enumerate_subspaces(a.field(), a.dim(), std::nullopt, budget.max_subspaces,
                        [&](const Subspace& s) {
                            if (is_bracket_closed(a, s)) out.push_back({&a, s, true});
                            return true;
                        });
    return out;
}

namespace {

bool subspace_is_ideal(const Algebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector ei = Vector::unit(a.field(), a.dim(), i);
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Vector b = s.basis_row(r);
            if (!s.contains(a.bracket(ei, b)) || !s.contains(a.bracket(b, ei))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<SubalgebraHandle> enumerate_ideals(const Algebra& a, const ScanBudget& budget) {
    check_exhaustive_budget(a, budget);
    std::vector<SubalgebraHandle> out;
    enumerate_subspaces(a.field(), a.dim(), std::nullopt, budget.max_subspaces,
                        [&](const Subspace& s) {
                            // an ideal is automatically bracket-closed
                            if (subspace_is_ideal(a, s)) out.push_back({&a, s, true});
                            return true;
                        });
    return out;
}

// ------------------------------------------------------------ the property

namespace {

struct SubspaceOrder {
    bool operator()(const Subspace& a, const Subspace& b) const { return subspace_less(a, b); }
};

// All spans of sample-grid vectors, built one generator at a time and deduped
// by canonical form.
std::set<Subspace, SubspaceOrder> sampled_spans(const Algebra& a, const ScanBudget& budget) {
    const FieldSpec& f = a.field();
    std::size_t n = a.dim();
    std::vector<Scalar> sample = budget.sample_set.empty()
                                     ? default_sample_set(f, budget.max_coeff_degree)
                                     : budget.sample_set;
    // coordinate vectors over the grid
    std::vector<Vector> pool;
    std::vector<std::size_t> odo(n, 0);
    while (true) {
        Vector v = Vector::zero(f, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = sample[odo[i]];
        if (!v.is_zero()) pool.push_back(std::move(v));
        std::size_t i = n;
        bool carry = true;
        while (i-- > 0) {
            if (++odo[i] < sample.size()) { carry = false; break; }
            odo[i] = 0;
        }
        if (carry) break;
    }

    std::set<Subspace, SubspaceOrder> seen;
    std::vector<Subspace> frontier{Subspace::zero(f, n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& s : frontier) {
            if (s.dim() == n) continue;
            if (s.dim() + 1 == n) {
                // the pool contains the unit vectors, so every proper
                // subspace of codimension 1 grows to the full space
                seen.insert(Subspace::full(f, n));
                continue;
            }
            for (const Vector& v : pool) {
                if (s.contains(v)) continue;
                Subspace grown = s.extended(v);
                if (seen.size() >= budget.max_subspaces)
                    throw BudgetExceeded("sampled span lattice exceeded the subspace guard");
                if (seen.insert(grown).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

PropertyReport check_property_ideal_or_self_idealizing(const Algebra& a,
                                                       const ScanBudget& budget) {
    if (!check_left_leibniz(a).pass)
        throw IdentityFailed("algebra fails the left Leibniz identity");

    PropertyReport report;
    report.algebra_name = a.name();

    auto classify = [&](const SubalgebraHandle& handle) {
        ++report.counts.subalgebras;
        Classification c = classify_subalgebra(a, handle);
        switch (c.verdict) {
            case Verdict::Ideal: ++report.counts.ideals; break;
            case Verdict::SelfIdealizing: ++report.counts.self_idealizing; break;
            case Verdict::Neither:
                ++report.counts.neither;
                report.holds = false;
                if (!report.counterexample) report.counterexample = {handle, c};
                break;
        }
    };

    bool exhaustive = budget.mode == ScanMode::Exhaustive && a.field().kind == FieldKind::Prime;
    report.exhaustive = exhaustive;
    if (exhaustive) {
        check_exhaustive_budget(a, budget);
        enumerate_subspaces(a.field(), a.dim(), std::nullopt, budget.max_subspaces,
                            [&](const Subspace& s) {
                                ++report.counts.subspaces_scanned;
                                if (is_bracket_closed(a, s)) classify({&a, s, true});
                                return true;
                            });
    } else {
        auto spans = sampled_spans(a, budget);
        report.counts.subspaces_scanned = spans.size();
        std::set<Subspace, SubspaceOrder> closed;
        for (const Subspace& s : spans) {
            SubalgebraHandle handle = close_span(a, s);
            if (closed.insert(handle.space).second) classify(handle);
        }
    }
    return report;
}

// ------------------------------------------------------------ radical

Subspace nilpotent_radical(const Algebra& a, const ScanBudget& budget) {
    if (!check_left_leibniz(a).pass)
        throw IdentityFailed("algebra fails the left Leibniz identity");
    std::vector<SubalgebraHandle> ideals = enumerate_ideals(a, budget);
    Subspace radical = Subspace::zero(a.field(), a.dim());
    std::vector<Subspace> nilpotent_ideals;
    for (const auto& ideal : ideals)
        if (is_nilpotent(a, ideal.space)) {
            nilpotent_ideals.push_back(ideal.space);
            radical = radical + ideal.space;
        }
    // finite-dimensional theory: the sum of nilpotent ideals is nilpotent
    if (!subspace_is_ideal(a, radical) || !is_nilpotent(a, radical))
        throw RadicalInconsistent("sum of nilpotent ideals is not a nilpotent ideal");
    for (const Subspace& s : nilpotent_ideals)
        if (!radical.contains(s))
            throw RadicalInconsistent("radical misses a nilpotent ideal");
    return radical;
}

RadicalReport verify_declared_radical(const Algebra& a, const SubalgebraHandle& s,
                                      const ScanBudget& budget) {
    RadicalReport report;
    report.is_ideal = subspace_is_ideal(a, s.space);
    report.is_nilpotent = is_nilpotent(a, s.space);
    if (a.field().kind == FieldKind::Prime) {
        report.maximal = nilpotent_radical(a, budget) == s.space ? Tri::Yes : Tri::No;
    } else {
        report.maximal = Tri::Unknown;  // declared, not verified
    }
    return report;
}

}  // namespace leibniz
