// Acceptance gate: runs every release criterion and prints one pass/fail line
// per criterion. All arithmetic is exact, so every comparison below is strict
// equality; the only numeric tolerances are the wall-clock caps, pinned here.
//
// Usage: acceptance <path-to-cli-binary>
// Exit code: number of failed criteria.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "leibniz/derivations.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/latticescan.hpp"
#include "leibniz/zoo.hpp"

using namespace leibniz;

namespace {

std::string cli_path;

const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);
const FieldSpec GF5 = FieldSpec::prime(5);
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec GF2T = FieldSpec::rational_function(2, "t");

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& on_failure) {
        if (!cond) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << on_failure;
        }
    }
    void note(const std::string& text) {
        if (!detail.str().empty()) detail << "; ";
        detail << text;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

Vector vec(const FieldSpec& f, std::initializer_list<const char*> entries) {
    std::vector<Scalar> c;
    for (const char* e : entries) c.push_back(Scalar::parse(f, e));
    return Vector(f, std::move(c));
}

// Every constructor output that validates; shared by criteria 5 and 10.
std::vector<Algebra> validated_corpus() {
    Scalar t = Scalar::parse(GF2T, "t");
    return {
        build_cyclic_dim2(GF2),
        build_cyclic_dim2(GF3),
        build_cyclic_dim2(GF5),
        build_cyclic_dim2(QQ),
        build_theorem_A(GF3, 2, Scalar::one(GF3)),
        build_theorem_A(GF5, 3, Scalar::from_integer(GF5, 2)),
        build_example_3_10(GF2T, t),
        build_example_3_8(GF2T, t, t),
        build_theorem_C(GF2T, t, Scalar::one(GF2T), Scalar::one(GF2T)),
        build_heisenberg(GF2),
        build_heisenberg(GF3),
        build_heisenberg(QQ),
        build_strong_extraspecial(GF3, 2, {Scalar::one(GF3), Scalar::one(GF3)}),
        build_strong_extraspecial(GF2T, 2, {Scalar::one(GF2T), t}),
    };
}

// ---------------------------------------------------------------------------
// Criterion 1: the scaled one-dimensional-action algebras satisfy the
// subalgebra property exhaustively; `property` exits 0; < 5 s per instance.
Outcome criterion_1() {
    Outcome o;
    struct Case {
        Algebra a;
        std::size_t expected_subspaces;
        std::string file;
    };
    std::vector<Case> cases = {
        {build_theorem_A(GF3, 2, Scalar::one(GF3)), 28, "acc_ta_gf3.json"},
        {build_theorem_A(GF5, 3, Scalar::from_integer(GF5, 2)), 1120, "acc_ta_gf5.json"},
    };
    for (const Case& c : cases) {
        auto start = std::chrono::steady_clock::now();
        PropertyReport r = check_property_ideal_or_self_idealizing(c.a);
        save_algebra(c.a, c.file);
        RunResult cli = run_cli("property " + c.file);
        double elapsed = seconds_since(start);
        o.require(r.holds && r.exhaustive, c.a.name() + ": property does not hold");
        o.require(r.counts.subspaces_scanned == c.expected_subspaces,
                  c.a.name() + ": scanned " + std::to_string(r.counts.subspaces_scanned) +
                      " subspaces, expected " + std::to_string(c.expected_subspaces));
        o.require(cli.exit_code == 0, c.a.name() + ": `property` exited " +
                                          std::to_string(cli.exit_code) + ", expected 0");
        o.require(elapsed < 5.0, c.a.name() + ": took " + fmt_seconds(elapsed) + ", cap 5s");
        o.note(c.a.name() + ": " + std::to_string(r.counts.subspaces_scanned) + " subspaces, " +
               fmt_seconds(elapsed));
        std::remove(c.file.c_str());
    }
    return o;
}

// Criterion 2: structure of the same two instances — left center, idealizer
// of span{w}, the action scalars, and the nilpotent radical.
Outcome criterion_2() {
    Outcome o;
    struct Case {
        Algebra a;
        Scalar sigma;
    };
    std::vector<Case> cases = {
        {build_theorem_A(GF3, 2, Scalar::one(GF3)), Scalar::one(GF3)},
        {build_theorem_A(GF5, 3, Scalar::from_integer(GF5, 2)), Scalar::from_integer(GF5, 2)},
    };
    for (const Case& c : cases) {
        const FieldSpec& f = c.a.field();
        std::size_t n = c.a.dim(), m = n - 1;
        std::vector<Vector> a_rows;
        for (std::size_t i = 0; i < m; ++i) a_rows.push_back(Vector::unit(f, n, i));
        Subspace A = Subspace::span(f, n, a_rows);
        Vector w = Vector::unit(f, n, m);
        Subspace wline = Subspace::span(f, n, {w});

        o.require(centers(c.a).left == A, c.a.name() + ": left center != A");
        Subspace ideal_w = idealizer(c.a, make_subalgebra(c.a, wline));
        o.require(ideal_w == wline, c.a.name() + ": idealizer(span{w}) = " +
                                        format_subspace(ideal_w) + ", expected span{w}");
        auto act = analyze_action(c.a, w, A);
        o.require(act.has_value() && act->first == c.sigma && act->second.is_zero(),
                  c.a.name() + ": action of w on A is not (sigma, 0)");
        o.require(nilpotent_radical(c.a) == A, c.a.name() + ": nilpotent radical != A");
    }
    if (o.pass) o.note("both instances: left center = A, I(span{w}) = span{w}, action (sigma,0), radical = A");
    return o;
}

// Criterion 3: the Lie heisenberg algebra over GF(2) is the negative control;
// first counterexample span{x}, Neither, idealizer series of length 3; < 1 s.
Outcome criterion_3() {
    Outcome o;
    Algebra h = build_heisenberg(GF2);
    auto start = std::chrono::steady_clock::now();
    save_algebra(h, "acc_heis2.json");
    RunResult cli = run_cli("property acc_heis2.json");
    double elapsed = seconds_since(start);
    std::remove("acc_heis2.json");
    o.require(cli.exit_code == 1,
              "`property` exited " + std::to_string(cli.exit_code) + ", expected 1");
    o.require(contains(cli.output, "1,0,0") && contains(cli.output, "Neither"),
              "counterexample span{x} / Neither missing from output");
    Subspace x = Subspace::span(GF2, 3, {vec(GF2, {"1", "0", "0"})});
    Subspace xz = Subspace::span(GF2, 3, {vec(GF2, {"1", "0", "0"}), vec(GF2, {"0", "0", "1"})});
    SubalgebraHandle hx = make_subalgebra(h, x);
    o.require(classify_subalgebra(h, hx).verdict == Verdict::Neither,
              "span{x} not classified Neither");
    std::vector<Subspace> series = upper_idealizer_series(h, hx);
    o.require(series == std::vector<Subspace>{x, xz, Subspace::full(GF2, 3)},
              "upper idealizer series != [span{x}, span{x,z}, L]");
    o.require(elapsed < 1.0, "took " + fmt_seconds(elapsed) + ", cap 1s");
    o.note("counterexample span{x}, series length 3, " + fmt_seconds(elapsed));
    return o;
}

// Criterion 4: the derivation algebra of the dim-2 cyclic algebra has
// dimension 2 over GF(2), GF(3), GF(5), Q, every basis derivation has the
// predicted shape, and over GF(2) all derivation commutators vanish.
Outcome criterion_4() {
    Outcome o;
    for (const FieldSpec& f : {GF2, GF3, GF5, QQ}) {
        Algebra a = build_cyclic_dim2(f);
        DerivationSpace d = derivation_space(a);
        o.require(d.dim() == 2, "dim over " + f.description() + " is " + std::to_string(d.dim()) +
                                    ", expected 2");
        for (const Matrix& m : d.basis) {
            // f(a1) = alpha a1 + beta a2 and f(a2) = 2 alpha a2; in
            // characteristic 2 this is f(a2) = 0, i.e. alpha E11 + beta E21.
            o.require(m.at(0, 1).is_zero() && m.at(1, 1) == m.at(0, 0) + m.at(0, 0),
                      "derivation shape violated over " + f.description());
        }
    }
    DerivationSpace d2 = derivation_space(build_cyclic_dim2(GF2));
    Matrix zero(GF2, 2, 2);
    bool abelian = true;
    std::pair<std::size_t, std::size_t> witness{0, 0};
    for (std::size_t i = 0; i < d2.basis.size() && abelian; ++i)
        for (std::size_t j = 0; j < d2.basis.size(); ++j)
            if (!(commutator(d2.basis[i], d2.basis[j]) == zero)) {
                abelian = false;
                witness = {i, j};
                break;
            }
    o.require(abelian, "GF(2) derivation commutator [D" + std::to_string(witness.first) + ",D" +
                           std::to_string(witness.second) +
                           "] != 0 (the derivation algebra is not abelian)");
    if (o.pass) o.note("dim 2 with the predicted shape over all four fields; GF(2) commutators vanish");
    return o;
}

// Criterion 5: every derivation maps the left/right/full center into itself,
// on every validated algebra in the corpus.
Outcome criterion_5() {
    Outcome o;
    std::size_t checked = 0;
    for (const Algebra& a : validated_corpus()) {
        InvarianceReport r = check_center_invariance(a, derivation_space(a));
        o.require(r.pass, a.name() + ": a derivation moves a center off itself");
        ++checked;
    }
    o.note("center invariance on " + std::to_string(checked) + " validated algebras");
    return o;
}

// Criterion 6: the dim-3 characteristic-2 algebra with eta = t, end to end;
// < 30 s.
Outcome criterion_6() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Algebra a = build_example_3_10(GF2T, Scalar::parse(GF2T, "t"));
    LeibnizCheck chk = check_left_leibniz(a);
    o.require(chk.pass, "identity fails");
    o.note("identity holds on all 27 basis triples");
    Subspace zline = Subspace::span(GF2T, 3, {vec(GF2T, {"1", "0", "0"})});
    o.require(leibniz_kernel(a) == zline, "kernel != span{z}");
    o.require(centers(a).full == zline, "center != span{z}");
    Subspace az = Subspace::span(GF2T, 3, {vec(GF2T, {"1", "0", "0"}), vec(GF2T, {"0", "1", "0"})});
    RadicalReport rad = verify_declared_radical(a, make_subalgebra(a, az));
    o.require(rad.is_nilpotent && rad.is_ideal, "span{a,z} is not a nilpotent ideal");
    ScanBudget budget;
    budget.mode = ScanMode::Sampled;
    budget.max_coeff_degree = 2;
    PropertyReport prop = check_property_ideal_or_self_idealizing(a, budget);
    o.require(prop.counts.neither == 0,
              "sampled scan found " + std::to_string(prop.counts.neither) + " Neither subalgebras");
    double elapsed = seconds_since(start);
    o.require(elapsed < 30.0, "took " + fmt_seconds(elapsed) + ", cap 30s");
    o.note("degree-2 grid: " + std::to_string(prop.counts.subspaces_scanned) + " spans, " +
           std::to_string(prop.counts.neither) + " Neither, " + fmt_seconds(elapsed));
    return o;
}

// Criterion 7: the dim-4 characteristic-2 algebra with sigma = eta = t, end to
// end; < 120 s.
Outcome criterion_7() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Scalar t = Scalar::parse(GF2T, "t");
    Algebra a = build_example_3_8(GF2T, t, t);
    LeibnizCheck chk = check_left_leibniz(a);
    o.require(chk.pass, "identity fails");
    o.note("identity holds on all 64 basis triples");
    Subspace zline = Subspace::span(GF2T, 4, {vec(GF2T, {"1", "0", "0", "0"})});
    o.require(leibniz_kernel(a) == zline, "kernel != span{z}");
    ScanBudget budget;
    budget.mode = ScanMode::Sampled;
    budget.max_coeff_degree = 1;
    PropertyReport prop = check_property_ideal_or_self_idealizing(a, budget);
    std::string neither = std::to_string(prop.counts.neither);
    if (prop.counts.neither > 0 && prop.counterexample) {
        neither += " (first: " + format_subspace(prop.counterexample->first.space) + ")";
    }
    o.require(prop.counts.neither == 0, "sampled scan found " + neither + " Neither subalgebras");
    double elapsed = seconds_since(start);
    o.require(elapsed < 120.0, "took " + fmt_seconds(elapsed) + ", cap 120s");
    o.note("degree-1 grid: " + std::to_string(prop.counts.subspaces_scanned) + " spans, " +
           fmt_seconds(elapsed));
    return o;
}

// Criterion 8: side-condition gates — RootExists for every eta in GF(2), and
// NotStrong with witness x1+x2 for the (1,1) extraspecial table over GF(2).
Outcome criterion_8() {
    Outcome o;
    for (int e = 0; e < 2; ++e) {
        Scalar eta = e == 0 ? Scalar::zero(GF2) : Scalar::one(GF2);
        bool threw = false;
        try {
            build_example_3_10(GF2, eta);
        } catch (const RootExists&) {
            threw = true;
        }
        o.require(threw, "eta = " + std::to_string(e) + " over GF(2) did not raise RootExists");
    }
    bool threw = false;
    std::string msg;
    try {
        build_strong_extraspecial(GF2, 2, {Scalar::one(GF2), Scalar::one(GF2)});
    } catch (const NotStrong& e) {
        threw = true;
        msg = e.what();
    }
    o.require(threw, "(1,1) over GF(2) did not raise NotStrong");
    o.require(contains(msg, "1,1"), "NotStrong witness is not x1+x2: \"" + msg + "\"");
    if (o.pass) o.note("RootExists for eta in {0,1}; NotStrong witness x1+x2");
    return o;
}

// Criterion 9: subspace counts against an independent brute-force oracle that
// reduces every n x n matrix over GF(q) and dedupes the canonical forms.
std::uint64_t matrix_scan_subspace_count(int q, int n) {
    std::vector<int> inverse(q);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (a * b % q == 1) inverse[a] = b;

    std::vector<int> odometer(static_cast<std::size_t>(n) * n, 0);
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> m(odometer.size());
    while (true) {
        m = odometer;
        // reduced row echelon form over the integers mod q
        int row = 0;
        for (int col = 0; col < n && row < n; ++col) {
            int pivot = -1;
            for (int r = row; r < n; ++r)
                if (m[r * n + col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            for (int c = 0; c < n; ++c) std::swap(m[row * n + c], m[pivot * n + c]);
            int inv = inverse[m[row * n + col]];
            for (int c = 0; c < n; ++c) m[row * n + c] = m[row * n + c] * inv % q;
            for (int r = 0; r < n; ++r) {
                if (r == row || m[r * n + col] == 0) continue;
                int factor = m[r * n + col];
                for (int c = 0; c < n; ++c)
                    m[r * n + c] = (m[r * n + c] + (q - factor) * m[row * n + c]) % q;
            }
            ++row;
        }
        std::uint64_t key = 0;
        for (int cell : m) key = key * q + cell;
        seen.insert(key);

        std::size_t i = 0;
        while (i < odometer.size() && ++odometer[i] == q) odometer[i++] = 0;
        if (i == odometer.size()) break;
    }
    return seen.size();
}

Outcome criterion_9() {
    Outcome o;
    struct Case {
        int q, n;
        std::uint64_t expected;
    };
    for (const Case& c : {Case{2, 3, 16}, Case{3, 3, 28}, Case{3, 4, 212}, Case{2, 4, 67}}) {
        std::uint64_t oracle = matrix_scan_subspace_count(c.q, c.n);
        std::uint64_t gaussian = 0;
        for (int k = 0; k <= c.n; ++k) gaussian += gaussian_binomial(c.n, k, c.q);
        std::uint64_t enumerated = all_subspaces(FieldSpec::prime(c.q), c.n).size();
        std::string tag = "(q=" + std::to_string(c.q) + ",n=" + std::to_string(c.n) + ")";
        o.require(oracle == c.expected, tag + ": oracle " + std::to_string(oracle) +
                                            " != expected " + std::to_string(c.expected));
        o.require(gaussian == c.expected, tag + ": Gaussian-binomial sum " +
                                              std::to_string(gaussian) + " != expected " +
                                              std::to_string(c.expected));
        o.require(enumerated == c.expected, tag + ": enumerator produced " +
                                                std::to_string(enumerated) + " subspaces");
    }
    if (o.pass) o.note("oracle = Gaussian sum = enumerator on all four (q,n) pairs: 16, 28, 212, 67");
    return o;
}

// Criterion 10: structural identities across the whole validated corpus.
Outcome criterion_10() {
    Outcome o;
    for (const Algebra& a : validated_corpus()) {
        Subspace leib = leibniz_kernel(a);
        o.require(centers(a).left.contains(leib), a.name() + ": Leib(L) escapes the left center");
        o.require(is_lie(quotient(a, make_subalgebra(a, leib))), a.name() + ": L/Leib(L) is not Lie");
    }

    // idealizer(S) contains S and is bracket-closed, for 50 sampled subalgebras
    std::size_t sampled = 0;
    for (const Algebra& a : validated_corpus()) {
        if (a.field().kind != FieldKind::Prime) continue;
        for (const SubalgebraHandle& s : enumerate_subalgebras(a)) {
            Subspace ideal = idealizer(a, s);
            o.require(ideal.contains(s.space), a.name() + ": idealizer does not contain S");
            o.require(is_bracket_closed(a, ideal), a.name() + ": idealizer is not closed");
            if (++sampled == 50) break;
        }
        if (sampled == 50) break;
    }
    o.require(sampled == 50, "only sampled " + std::to_string(sampled) + " subalgebras");

    // modular dimension law on 100 deterministic pseudo-random pairs per field
    for (const FieldSpec& f : {GF2, GF3, GF5, QQ, GF2T}) {
        std::vector<Scalar> grid = default_sample_set(f, 1);
        std::uint64_t state = 0x2545F4914F6CDD1Dull;
        auto next = [&state]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return state >> 33;
        };
        std::size_t n = 4;
        auto random_subspace = [&]() {
            std::vector<Vector> rows;
            std::size_t k = next() % (n + 1);
            for (std::size_t r = 0; r < k; ++r) {
                std::vector<Scalar> coords;
                for (std::size_t c = 0; c < n; ++c) coords.push_back(grid[next() % grid.size()]);
                rows.emplace_back(f, std::move(coords));
            }
            return Subspace::span(f, n, rows);
        };
        for (int trial = 0; trial < 100; ++trial) {
            Subspace u = random_subspace(), w = random_subspace();
            bool ok = u.dim() + w.dim() == (u + w).dim() + intersect(u, w).dim();
            o.require(ok, f.description() + ": modular dimension law fails");
            if (!ok) break;
        }
    }
    if (o.pass)
        o.note("kernel/center containment, Lie quotients, 50 idealizers, 500 dimension-law pairs");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
        return 64;
    }
    cli_path = argv[1];

    struct Entry {
        const char* title;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"subalgebra property, exhaustive", criterion_1},
        {"scaled-action structure", criterion_2},
        {"negative control", criterion_3},
        {"derivation dimensions and shapes", criterion_4},
        {"center invariance under derivations", criterion_5},
        {"dim-3 char-2 algebra end to end", criterion_6},
        {"dim-4 char-2 algebra end to end", criterion_7},
        {"side-condition gates", criterion_8},
        {"enumeration oracle", criterion_9},
        {"structural identities", criterion_10},
    };

    int failed = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.note(std::string("unexpected exception: ") + ex.what());
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2d [%s]: %s — %s\n", index, e.title, o.pass ? "PASS" : "FAIL",
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed;
}
