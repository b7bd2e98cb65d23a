// Command-line front end: parse an algebra file, run the requested
// verification or enumeration, print a human summary and (optionally) a JSON
// report. Exit codes: 0 all checks pass, 1 a check failed or a counterexample
// was found, 2 invalid input.
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/latticescan.hpp"
#include "leibniz/zoo.hpp"

using namespace leibniz;

namespace {

// "a + t*z" style rendering of a coordinate vector over the basis names
std::string pretty_vector(const Algebra& a, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (v[i].is_one()) {
            out += a.basis_names()[i];
        } else {
            std::string coeff = v[i].to_string();
            if (coeff.find_first_of("+-/") != std::string::npos && coeff.size() > 1)
                coeff = "(" + coeff + ")";
            out += coeff + "*" + a.basis_names()[i];
        }
    }
    return out.empty() ? "0" : out;
}

std::string pretty_subspace(const Algebra& a, const Subspace& s) {
    if (s.dim() == 0) return "{0}";
    std::string out = "span{";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += ", ";
        out += pretty_vector(a, s.basis_row(r));
    }
    return out + "}";
}

Json subspace_rows(const Subspace& s) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < s.ambient_dim(); ++c)
            row.push_back(s.basis().at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_coords(const Vector& v) {
    Json row = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) row.push_back(v[i].to_string());
    return row;
}

void write_json_report(const std::string& path, const Json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << report.dump(2) << "\n";
}

// Every verb except `check` refuses to report structural results for a table
// that is not actually a left Leibniz algebra.
void require_identity(const Algebra& a) {
    LeibnizCheck c = check_left_leibniz(a);
    if (!c.pass) {
        const auto& t = c.violations.front();
        throw IdentityFailed("left Leibniz identity fails on (" + a.basis_names()[t[0]] + "," +
                             a.basis_names()[t[1]] + "," + a.basis_names()[t[2]] + ") and " +
                             std::to_string(c.violations.size() - 1) + " more triple(s)");
    }
}

SubalgebraHandle closed_span(const Algebra& a, const std::string& text, bool& enlarged) {
    Subspace s = parse_subspace(a.field(), a.dim(), text);
    SubalgebraHandle h = close_span(a, s);
    enlarged = h.space.dim() > s.dim();
    return h;
}

ScanBudget make_budget(const Algebra& a, int max_degree, std::size_t max_subspaces) {
    ScanBudget budget;
    budget.max_subspaces = max_subspaces;
    if (a.field().kind == FieldKind::Prime) {
        budget.mode = ScanMode::Exhaustive;
    } else {
        budget.mode = ScanMode::Sampled;
        budget.max_coeff_degree = max_degree;
        budget.sample_set = default_sample_set(a.field(), max_degree);
    }
    return budget;
}

int cmd_check(const std::string& file, const std::string& json_out) {
    Algebra a = load_algebra(file);
    LeibnizCheck c = check_left_leibniz(a);
    std::size_t n = a.dim();
    Json report;
    report["command"] = "check";
    report["algebra"] = a.name();
    report["triples"] = n * n * n;
    report["identity"] = c.pass ? "pass" : "fail";
    Json viols = Json::array();
    for (const auto& t : c.violations)
        viols.push_back({a.basis_names()[t[0]], a.basis_names()[t[1]], a.basis_names()[t[2]]});
    report["violations"] = std::move(viols);
    write_json_report(json_out, report);
    if (c.pass) {
        std::cout << "identity: pass over " << n * n * n << " triples\n";
        return 0;
    }
    std::cout << "identity: FAIL on " << c.violations.size() << " of " << n * n * n
              << " triples\n";
    for (const auto& t : c.violations)
        std::cout << "  violation: (" << a.basis_names()[t[0]] << "," << a.basis_names()[t[1]]
                  << "," << a.basis_names()[t[2]] << ")\n";
    return 1;
}

int cmd_info(const std::string& file, const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    Subspace kernel = leibniz_kernel(a);
    Centers c = centers(a);
    bool lie = is_lie(a);
    std::cout << "algebra: " << (a.name().empty() ? "(unnamed)" : a.name()) << "\n"
              << "field: " << a.field().description() << "\n"
              << "dim: " << a.dim() << "\n"
              << "is_lie: " << (lie ? "yes" : "no") << "\n"
              << "kernel: " << pretty_subspace(a, kernel) << " (dim " << kernel.dim() << ")\n"
              << "left center: " << pretty_subspace(a, c.left) << " (dim " << c.left.dim() << ")\n"
              << "right center: " << pretty_subspace(a, c.right) << " (dim " << c.right.dim()
              << ")\n"
              << "center: " << pretty_subspace(a, c.full) << " (dim " << c.full.dim() << ")\n";
    Json report;
    report["command"] = "info";
    report["algebra"] = a.name();
    report["field"] = field_to_json(a.field());
    report["identity"] = "pass";
    report["dim"] = a.dim();
    report["is_lie"] = lie;
    report["kernel"] = subspace_rows(kernel);
    report["left_center"] = subspace_rows(c.left);
    report["right_center"] = subspace_rows(c.right);
    report["center"] = subspace_rows(c.full);
    write_json_report(json_out, report);
    return 0;
}

int cmd_derivations(const std::string& file, const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    DerivationSpace d = derivation_space(a);
    InvarianceReport inv = check_center_invariance(a, d);
    std::cout << "derivation space dim: " << d.dim() << "\n";
    for (std::size_t k = 0; k < d.basis.size(); ++k) {
        std::cout << "D" << k + 1 << ":";
        for (std::size_t j = 0; j < a.dim(); ++j)
            std::cout << " " << a.basis_names()[j] << "->"
                      << pretty_vector(a, d.basis[k].apply(Vector::unit(a.field(), a.dim(), j)));
        std::cout << "\n";
    }
    std::cout << "center invariance: " << (inv.pass ? "pass" : "FAIL") << "\n";
    Json report;
    report["command"] = "derivations";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    report["dim"] = d.dim();
    Json mats = Json::array();
    for (const Matrix& m : d.basis) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_coords(m.row(r)));
        mats.push_back(std::move(rows));
    }
    report["basis"] = std::move(mats);
    report["center_invariance"] = inv.pass ? "pass" : "fail";
    write_json_report(json_out, report);
    return inv.pass ? 0 : 1;
}

int cmd_series(const std::string& file, const std::string& span_text,
               const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    bool enlarged = false;
    SubalgebraHandle h = closed_span(a, span_text, enlarged);
    if (enlarged)
        std::cout << "note: span was not bracket-closed; closed to "
                  << pretty_subspace(a, h.space) << "\n";
    std::vector<Subspace> series = upper_idealizer_series(a, h);
    for (std::size_t i = 0; i < series.size(); ++i)
        std::cout << "I_" << i << ": " << pretty_subspace(a, series[i]) << " (dim "
                  << series[i].dim() << ")\n";
    Json report;
    report["command"] = "series";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    report["closure_enlarged"] = enlarged;
    report["subalgebra"] = subspace_rows(h.space);
    Json terms = Json::array();
    for (const Subspace& s : series) terms.push_back(subspace_rows(s));
    report["series"] = std::move(terms);
    write_json_report(json_out, report);
    return 0;
}

int cmd_classify(const std::string& file, const std::string& span_text,
                 const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    bool enlarged = false;
    SubalgebraHandle h = closed_span(a, span_text, enlarged);
    if (enlarged)
        std::cout << "note: span was not bracket-closed; closed to "
                  << pretty_subspace(a, h.space) << "\n";
    Classification cls = classify_subalgebra(a, h);
    Subspace ide = idealizer(a, h);
    std::vector<Subspace> series = upper_idealizer_series(a, h);
    std::cout << "subalgebra: " << pretty_subspace(a, h.space) << "\n"
              << "verdict: " << to_string(cls.verdict) << "\n"
              << "idealizer: " << pretty_subspace(a, ide) << "\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        std::cout << "I_" << i << ": " << pretty_subspace(a, series[i]) << "\n";
    if (cls.verdict == Verdict::Neither) {
        if (cls.idealizer_witness)
            std::cout << "idealizer grows by: " << pretty_vector(a, *cls.idealizer_witness)
                      << "\n";
        if (cls.non_ideal_witness)
            std::cout << "not an ideal: [" << pretty_vector(a, cls.non_ideal_witness->first)
                      << ", " << pretty_vector(a, cls.non_ideal_witness->second)
                      << "] escapes (or the mirror bracket does)\n";
    }
    Json report;
    report["command"] = "classify";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    report["closure_enlarged"] = enlarged;
    report["subalgebra"] = subspace_rows(h.space);
    report["verdict"] = to_string(cls.verdict);
    report["idealizer"] = subspace_rows(ide);
    Json terms = Json::array();
    for (const Subspace& s : series) terms.push_back(subspace_rows(s));
    report["series"] = std::move(terms);
    write_json_report(json_out, report);
    return 0;
}

int cmd_property(const std::string& file, int max_degree, std::size_t max_subspaces,
                 const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    auto start = std::chrono::steady_clock::now();
    PropertyReport rep =
        check_property_ideal_or_self_idealizing(a, make_budget(a, max_degree, max_subspaces));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "scan: " << (rep.exhaustive ? "exhaustive" : "sampled (grid)") << ", "
              << rep.counts.subspaces_scanned << " subspaces, " << rep.counts.subalgebras
              << " subalgebras (" << rep.counts.ideals << " ideals, "
              << rep.counts.self_idealizing << " self-idealizing, " << rep.counts.neither
              << " neither)\n";
    Json report;
    report["command"] = "property";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    report["exhaustive"] = rep.exhaustive;
    report["status"] = rep.holds ? (rep.exhaustive ? "pass" : "unknown") : "fail";
    report["counts"] = {{"subspaces", rep.counts.subspaces_scanned},
                        {"subalgebras", rep.counts.subalgebras},
                        {"ideals", rep.counts.ideals},
                        {"self_idealizing", rep.counts.self_idealizing},
                        {"neither", rep.counts.neither}};
    report["elapsed_ms"] = ms;
    if (rep.counterexample) {
        const auto& [h, cls] = *rep.counterexample;
        std::cout << "property: FAIL\n"
                  << "counterexample: " << pretty_subspace(a, h.space) << " — "
                  << format_subspace(h.space) << "\n"
                  << "verdict: " << to_string(cls.verdict) << "\n";
        report["counterexample"] = subspace_rows(h.space);
        report["counterexample_verdict"] = to_string(cls.verdict);
        write_json_report(json_out, report);
        return 1;
    }
    std::cout << "property: "
              << (rep.exhaustive ? "holds (exhaustive)" : "no counterexample within budget")
              << "\n";
    write_json_report(json_out, report);
    return 0;
}

int cmd_radical(const std::string& file, const std::string& declare_text,
                const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    Json report;
    report["command"] = "radical";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    if (!declare_text.empty()) {
        Subspace s = parse_subspace(a.field(), a.dim(), declare_text);
        SubalgebraHandle h = make_subalgebra(a, s);
        RadicalReport r = verify_declared_radical(a, h);
        std::cout << "declared: " << pretty_subspace(a, h.space) << "\n"
                  << "nilpotent: " << (r.is_nilpotent ? "yes" : "no") << "\n"
                  << "ideal: " << (r.is_ideal ? "yes" : "no") << "\n"
                  << "maximal: " << to_string(r.maximal) << "\n";
        report["declared"] = subspace_rows(h.space);
        report["nilpotent"] = r.is_nilpotent;
        report["ideal"] = r.is_ideal;
        report["maximal"] = to_string(r.maximal);
        write_json_report(json_out, report);
        return (r.is_nilpotent && r.is_ideal && r.maximal != Tri::No) ? 0 : 1;
    }
    Subspace rad = nilpotent_radical(a);
    std::cout << "nilpotent radical: " << pretty_subspace(a, rad) << " (dim " << rad.dim()
              << ")\n";
    report["radical"] = subspace_rows(rad);
    write_json_report(json_out, report);
    return 0;
}

int cmd_quotient(const std::string& file, const std::string& span_text, const std::string& out,
                 const std::string& json_out) {
    Algebra a = load_algebra(file);
    require_identity(a);
    Subspace s = parse_subspace(a.field(), a.dim(), span_text);
    SubalgebraHandle h = make_subalgebra(a, s);
    Algebra q = quotient(a, h);
    save_algebra(q, out);
    std::cout << "quotient dim " << q.dim() << " written to " << out << "\n";
    Json report;
    report["command"] = "quotient";
    report["algebra"] = a.name();
    report["identity"] = "pass";
    report["ideal"] = subspace_rows(h.space);
    report["quotient"] = algebra_to_json(q);
    write_json_report(json_out, report);
    return 0;
}

struct ZooArgs {
    std::string recipe;
    std::int64_t p = 0;      // 0: rationals unless --field given
    std::string field;       // "q", "gf(p)", "gf(p)(t)"
    std::vector<std::string> params;
    std::string out;
};

FieldSpec parse_field_flag(const ZooArgs& z) {
    if (!z.field.empty()) {
        std::string f = z.field;
        for (char& ch : f) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (f == "q" || f == "rationals") return FieldSpec::rationals();
        // gf(p) or gf(p)(t)
        if (f.rfind("gf(", 0) == 0) {
            std::size_t close = f.find(')');
            if (close != std::string::npos) {
                std::int64_t p = std::stoll(f.substr(3, close - 3));
                std::string rest = f.substr(close + 1);
                if (rest.empty()) return FieldSpec::prime(p);
                if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')')
                    return FieldSpec::rational_function(p, rest.substr(1, rest.size() - 2));
            }
        }
        throw ParseError("unrecognized --field '" + z.field + "'");
    }
    if (z.p > 0) return FieldSpec::prime(z.p);
    return FieldSpec::rationals();
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const std::string& kv : raw) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParseError("--param expects name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::vector<Scalar> parse_scalar_list(const FieldSpec& f, const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(Scalar::parse(f, item));
    return out;
}

int cmd_zoo(const ZooArgs& z) {
    FieldSpec f = parse_field_flag(z);
    auto params = parse_params(z.params);
    auto scalar = [&](const std::string& name, const char* fallback) {
        auto it = params.find(name);
        return Scalar::parse(f, it != params.end() ? it->second : std::string(fallback));
    };
    auto integer = [&](const std::string& name, std::size_t fallback) {
        auto it = params.find(name);
        return it != params.end() ? static_cast<std::size_t>(std::stoull(it->second)) : fallback;
    };
    Algebra a;
    std::optional<LeibnizCheck> attached;
    if (z.recipe == "cyclic2") {
        a = build_cyclic_dim2(f);
    } else if (z.recipe == "theorem-a") {
        a = build_theorem_A(f, integer("m", 2), scalar("sigma", "1"));
    } else if (z.recipe == "example-3-10") {
        a = build_example_3_10(f, scalar("eta", "t"));
    } else if (z.recipe == "example-3-8") {
        a = build_example_3_8(f, scalar("sigma", "t"), scalar("eta", "t"));
    } else if (z.recipe == "theorem-c") {
        a = build_theorem_C(f, scalar("eta", "t"), scalar("lambda", "0"), scalar("mu", "0"));
    } else if (z.recipe == "heisenberg") {
        a = build_heisenberg(f);
    } else if (z.recipe == "extraspecial") {
        std::size_t m = integer("m", 2);
        std::vector<Scalar> squares;
        if (auto it = params.find("squares"); it != params.end())
            squares = parse_scalar_list(f, it->second);
        else
            squares.assign(m, Scalar::one(f));
        a = build_strong_extraspecial(f, m, squares);
    } else if (z.recipe == "b1") {
        B1Params p;
        std::size_t m = integer("m", 2);
        if (auto it = params.find("squares"); it != params.end())
            p.squares = parse_scalar_list(f, it->second);
        else
            p.squares.assign(m, Scalar::one(f));
        p.eta = scalar("eta", "1");
        if (auto it = params.find("xi"); it != params.end())
            p.xi = parse_scalar_list(f, it->second);
        BFamilyResult r = build_B1(f, p);
        a = r.algebra;
        attached = r.identity;
    } else if (z.recipe == "b2") {
        B2Params p;
        std::size_t m = integer("m", 2);
        if (auto it = params.find("squares"); it != params.end())
            p.squares = parse_scalar_list(f, it->second);
        else
            p.squares.assign(m, Scalar::one(f));
        p.nu = scalar("nu", "0");
        if (auto it = params.find("xi"); it != params.end())
            p.xi = parse_scalar_list(f, it->second);
        if (auto it = params.find("xi_right"); it != params.end())
            p.xi_right = parse_scalar_list(f, it->second);
        BFamilyResult r = build_B2(f, p);
        a = r.algebra;
        attached = r.identity;
    } else {
        throw ParseError("unknown recipe '" + z.recipe +
                         "' (expected cyclic2, theorem-a, example-3-8, example-3-10, theorem-c, "
                         "heisenberg, b1, b2, extraspecial)");
    }
    save_algebra(a, z.out);
    std::cout << "wrote " << a.name() << " (dim " << a.dim() << ") to " << z.out << "\n";
    if (attached) {
        std::cout << "identity: " << (attached->pass ? "pass" : "FAIL") << " ("
                  << attached->violations.size() << " violating triple(s))\n";
        return attached->pass ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for finite-dimensional left Leibniz algebras"};
    app.require_subcommand(1);

    std::string file, span_text, json_out, out_path, declare_text;
    int max_degree = 2;
    std::size_t max_subspaces = 1'000'000;
    ZooArgs zoo_args;

    auto* check = app.add_subcommand("check", "verify the left Leibniz identity");
    check->add_option("file", file)->required();
    check->add_option("--json", json_out);

    auto* info = app.add_subcommand("info", "dimensions, kernel, centers, Lie test");
    info->add_option("file", file)->required();
    info->add_option("--json", json_out);

    auto* deriv = app.add_subcommand("derivations", "derivation space and center invariance");
    deriv->add_option("file", file)->required();
    deriv->add_option("--json", json_out);

    auto* series = app.add_subcommand("series", "upper idealizer series of a subalgebra");
    series->add_option("file", file)->required();
    series->add_option("--span", span_text)->required();
    series->add_option("--json", json_out);

    auto* classify = app.add_subcommand("classify", "ideal / self-idealizing / neither");
    classify->add_option("file", file)->required();
    classify->add_option("--span", span_text)->required();
    classify->add_option("--json", json_out);

    auto* property =
        app.add_subcommand("property", "is every subalgebra an ideal or self-idealizing?");
    property->add_option("file", file)->required();
    property->add_option("--max-degree", max_degree);
    property->add_option("--max-subspaces", max_subspaces);
    property->add_option("--json", json_out);

    auto* radical = app.add_subcommand("radical", "nilpotent radical (or verify a declared one)");
    radical->add_option("file", file)->required();
    radical->add_option("--declare", declare_text);
    radical->add_option("--json", json_out);

    auto* quot = app.add_subcommand("quotient", "quotient by an ideal");
    quot->add_option("file", file)->required();
    quot->add_option("--span", span_text)->required();
    quot->add_option("-o,--output", out_path)->required();
    quot->add_option("--json", json_out);

    auto* zoo = app.add_subcommand("zoo", "build a named algebra");
    zoo->add_option("recipe", zoo_args.recipe)->required();
    zoo->add_option("--p", zoo_args.p);
    zoo->add_option("--field", zoo_args.field);
    zoo->add_option("--param", zoo_args.params);
    zoo->add_option("-o,--output", zoo_args.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(file, json_out);
        if (*info) return cmd_info(file, json_out);
        if (*deriv) return cmd_derivations(file, json_out);
        if (*series) return cmd_series(file, span_text, json_out);
        if (*classify) return cmd_classify(file, span_text, json_out);
        if (*property) return cmd_property(file, max_degree, max_subspaces, json_out);
        if (*radical) return cmd_radical(file, declare_text, json_out);
        if (*quot) return cmd_quotient(file, span_text, out_path, json_out);
        if (*zoo) return cmd_zoo(zoo_args);
    } catch (const IdentityFailed& e) {
        std::cout << "identity: FAIL — " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
