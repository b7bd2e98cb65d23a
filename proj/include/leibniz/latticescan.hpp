#pragma once

#include <functional>
#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class ScanMode { Exhaustive, Sampled };

struct ScanBudget {
    ScanMode mode = ScanMode::Exhaustive;
    int max_coeff_degree = 2;            // sampled mode, function fields
    std::vector<Scalar> sample_set;      // empty: derive a default from the field
    std::size_t max_subspaces = 1'000'000;
    std::size_t max_states = 59'049;     // 3^10, guard on q^n for exhaustive scans
};

/// Default sampled-mode coefficient grid: all polynomials of degree <= d for
/// GF(p)(t), a small integer/fraction grid for Q.
std::vector<Scalar> default_sample_set(const FieldSpec& f, int max_degree);

/// Visits every subspace of F^n exactly once, in canonical order (by
/// dimension, then lexicographic pivot pattern, then free-entry odometer).
/// Stops early if the callback returns false.
void enumerate_subspaces(const FieldSpec& f, std::size_t n, std::optional<std::size_t> dim,
                         std::size_t max_subspaces,
                         const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n,
                                    std::optional<std::size_t> dim = std::nullopt,
                                    std::size_t max_subspaces = 1'000'000);

std::vector<SubalgebraHandle> enumerate_subalgebras(const Algebra& a,
                                                    const ScanBudget& budget = {});
std::vector<SubalgebraHandle> enumerate_ideals(const Algebra& a, const ScanBudget& budget = {});

struct PropertyCounts {
    std::size_t subspaces_scanned = 0;
    std::size_t subalgebras = 0;
    std::size_t ideals = 0;
    std::size_t self_idealizing = 0;
    std::size_t neither = 0;
};

struct PropertyReport {
    std::string algebra_name;
    bool holds = true;
    bool exhaustive = true;  // false: "no counterexample within budget" only
    std::optional<std::pair<SubalgebraHandle, Classification>> counterexample;
    PropertyCounts counts;
};

/// Is every subalgebra an ideal or self-idealizing? Exhaustive over prime
/// fields; over infinite fields, a deduped scan of sample-grid spans.
PropertyReport check_property_ideal_or_self_idealizing(const Algebra& a,
                                                       const ScanBudget& budget = {});

/// Greatest nilpotent ideal, by exhaustive ideal enumeration (prime fields).
Subspace nilpotent_radical(const Algebra& a, const ScanBudget& budget = {});

struct RadicalReport {
    bool is_nilpotent = false;
    bool is_ideal = false;
    Tri maximal = Tri::Unknown;  // verified against nilpotent_radical over prime fields
};

RadicalReport verify_declared_radical(const Algebra& a, const SubalgebraHandle& s,
                                      const ScanBudget& budget = {});

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial coefficient).
unsigned long long gaussian_binomial(unsigned long long n, unsigned long long k,
                                     unsigned long long q);

}  // namespace leibniz
