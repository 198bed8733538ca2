// Command-line front end: one subcommand per construction, exit 0 on pass,
// 1 on a failed check, 2 on parse or usage errors.

#include "hla/builtin.hpp"
#include "hla/checks.hpp"
#include "hla/document.hpp"
#include "hla/extensions.hpp"
#include "hla/homology.hpp"
#include "hla/report_io.hpp"
#include "hla/uce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

using namespace hla;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

/// Parse errors carry the file name in front of the location.
template <class F>
auto parsing(const std::string& path, F&& f)
{
    try {
        return f(read_input(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

HomLieAntialgebra load_algebra(const std::string& path)
{
    return parsing(path, [](const std::string& t) { return parse_algebra(t); });
}

/// Failed checks without a specific witness get one naming the check.
void ensure_witnesses(Report& r)
{
    for (auto& c : r.checks)
        if (!c.passed() && c.witnesses.empty()) c.witnesses.push_back(Witness{c.name, {}, {}, {}});
}

std::string nonzero_products(const HomLieAntialgebra& a)
{
    std::string out;
    const auto& b = a.basis();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            const Vector& p = a.product(i, j);
            if (is_zero(std::span<const Scalar>(p))) continue;
            const bool br = b.parity(i) == Parity::odd && b.parity(j) == Parity::odd;
            std::string lhs = br ? "[" + b.name(i) + "," + b.name(j) + "]" : b.name(i) + "." + b.name(j);
            std::string rhs;
            for (std::size_t k = 0; k < p.size(); ++k)
                if (!is_zero(p[k])) rhs += (rhs.empty() ? "" : " + ") + to_string(p[k]) + " " + b.name(k);
            out += (out.empty() ? "" : "; ") + lhs + " = " + rhs;
        }
    return out.empty() ? "none" : out;
}

std::string cocycle_summary(const HomLieAntialgebra& a, const Cocycle2& w)
{
    std::string out;
    const auto& b = a.basis();
    auto add = [&](const char* name, std::size_t i, std::size_t j, const Vector& v) {
        if (is_zero(std::span<const Scalar>(v))) return;
        out += (out.empty() ? "" : "; ") + std::string(name) + "(" + b.name(i) + "," + b.name(j) + ") = " +
               vector_text(v);
    };
    for (std::size_t i = 0; i < a.d0(); ++i)
        for (std::size_t j = i; j < a.d0(); ++j) add("w0", i, j, w.omega0(i, j));
    for (std::size_t i = 0; i < a.d0(); ++i)
        for (std::size_t j = 0; j < a.d1(); ++j) add("w1", i, a.d0() + j, w.omega1(i, j));
    for (std::size_t i = 0; i < a.d1(); ++i)
        for (std::size_t j = i + 1; j < a.d1(); ++j) add("w2", a.d0() + i, a.d0() + j, w.omega2(i, j));
    return out.empty() ? "0" : out;
}

long dim(std::size_t n) { return static_cast<long>(n); }

Report cmd_check(const HomLieAntialgebra& a)
{
    Report r;
    r.add(verify_axioms(a));
    r.add(check_multiplicative(a));
    r.dimension("dim_even", dim(a.d0()));
    r.dimension("dim_odd", dim(a.d1()));
    return r;
}

Report cmd_perfect(const HomLieAntialgebra& a)
{
    Report r = perfectness_report(a);
    auto d = derived_ideal(a);
    r.dimension("derived_ideal_even", dim(d.even.dim()));
    r.dimension("derived_ideal_odd", dim(d.odd.dim()));
    return r;
}

Report cmd_cohomology(const HomLieAntialgebra& a, const CoefficientSpace& v)
{
    Report r;
    r.add("d2.d1 = 0", (d2_matrix(a, v) * d1_matrix(a, v)).is_zero());
    H2Cohomology h = h2_cohomology(a, v);
    r.dimension("rank_d1", dim(h.rank_d1));
    r.dimension("rank_d2", dim(h.rank_d2));
    r.dimension("dim_ker_d2", dim(h.dim_ker_d2));
    r.dimension("dim_cocycles", dim(h.dim_cocycles));
    r.dimension("H2", dim(h.dim));
    for (std::size_t k = 0; k < h.representatives.size(); ++k)
        r.note("representative_" + std::to_string(k), cocycle_summary(a, h.representatives[k]));
    return r;
}

Report cmd_homology(const HomLieAntialgebra& a)
{
    Report r;
    const Matrix d2 = d2_chain_matrix(a), d3 = d3_chain_matrix(a);
    const Matrix comp = d2 * d3;
    Check c{"d2.d3 = 0", Status::pass, {}, {}};
    const std::size_t n = a.dim();
    for (std::size_t t = 0; t < comp.cols(); ++t) {
        Vector col = comp.column(t);
        if (is_zero(std::span<const Scalar>(col))) continue;
        c.status = Status::fail;
        const auto& b = a.basis();
        c.witnesses.push_back(
            Witness{"d2.d3", {b.name(t / (n * n)), b.name((t / n) % n), b.name(t % n)}, col, zero_vector(n)});
    }
    const bool ok = c.passed();
    r.add(std::move(c));
    r.dimension("dim_tensor2", dim(n * n));
    r.dimension("rank_d2", dim(rank(d2)));
    r.dimension("rank_d3", dim(rank(d3)));
    if (ok) {
        H2Homology h = h2_homology(a);
        r.dimension("dim_ker_d2", dim(h.ker_d2.dim()));
        r.dimension("dim_I_a", dim(h.ia.dim()));
        r.dimension("H2", dim(h.dim));
        r.dimension("H2_mod_im_d3", dim(h.dim_mod_im_d3));
    }
    return r;
}

Report extension_report(const CentralExtension& e)
{
    Report r = verify_central_extension(e);
    Check ax = verify_axioms(e.total);
    ax.name = "total-axioms";
    r.add(std::move(ax));
    r.note("total_products", nonzero_products(e.total));
    return r;
}

Report cocycle_failure_report(const CheckFailure& f)
{
    Report r;
    r.add(f.check());
    r.note("error", f.what());
    return r;
}

Report cmd_crossed(const CentralExtension& e)
{
    Report r;
    Report ext = verify_central_extension(e);
    r.append(ext, "extension");
    if (!ext.passed()) return r;
    CrossedModule cm = crossed_module_from_central_extension(e);
    r.append(verify_crossed_module(cm), "crossed_module");
    return r;
}

Report cmd_uce(const UceResult& u)
{
    Report r = verify_uce(u);
    r.append(well_definedness_check(u.base, u), "well_defined");
    r.append(kernel_vs_h2(u.base, u), "kernel_vs_H2");
    if (u.base_perfect) r.add("uce-perfect", uce_is_perfect(u));
    else {
        r.note("forced", "base is not perfect; no universality claim");
        r.dimension("uce_perfect", uce_is_perfect(u) ? 1 : 0);
    }
    r.note("uce_products", nonzero_products(u.uce_algebra));
    return r;
}

Report cmd_universality(const UceResult& u, const CentralExtension& e)
{
    Report r;
    Report ext = verify_central_extension(e);
    r.append(ext, "extension");
    if (!ext.passed()) return r;
    UniversalityCertificate c = universality_morphism(u, e);
    r.append(c.report);
    r.note("phi", morphism_text(c.phi, u.uce_algebra, e.total));
    return r;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items)
{
    std::map<std::string, std::string> out;
    for (const auto& s : items) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects k=v, got '" + s + "'");
        out[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return out;
}

Scalar param_scalar(const std::map<std::string, std::string>& p, const std::string& key, const Scalar& fallback)
{
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    Scalar s;
    if (!try_parse_scalar(it->second, s)) throw UsageError("parameter " + key + " is not a rational: " + it->second);
    return s;
}

Cocycle2 exe02_cocycle(const HomLieAntialgebra& base, const Scalar& mu)
{
    CoefficientSpace v{GradedBasis{{}, {"z"}}, Matrix(0, 0), Matrix(1, 1)};
    v.beta(0, 0) = mu;
    Cocycle2 w = Cocycle2::zero(base, v);
    w.omega1(0, 0)[0] = mu;
    return w;
}

Report k1_report(const K1WindowReport& k)
{
    Report r;
    for (const char* id : {"hanti01", "hanti02", "hanti03", "hanti04"}) {
        Check c{id, Status::pass, {}, {}};
        for (std::size_t i = 0; i < k.failures.size(); ++i)
            if (k.failures[i].identity == id) {
                c.status = Status::fail;
                Witness w = k.failures[i];
                w.arguments.push_back("values: " + k.failure_values[i]);
                c.witnesses.push_back(std::move(w));
            }
        auto it = k.checked_per_identity.find(id);
        r.dimension(std::string("checked_") + id, it == k.checked_per_identity.end() ? 0 : it->second);
        if (!c.passed()) c.message = std::to_string(c.witnesses.size()) + " failing argument tuples";
        r.add(std::move(c));
    }
    r.dimension("checked", k.checked);
    r.dimension("skipped", k.skipped);
    r.dimension("failures", static_cast<long>(k.failures.size()));
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hom-Lie antialgebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable report");

    std::string file, second, out, bundle, aux;
    bool force = false;
    std::vector<std::string> params;

    auto* check = app.add_subcommand("check", "verify the defining identities and multiplicativity");
    check->add_option("FILE", file, "algebra document ('-' for stdin)")->required();
    auto* perfect = app.add_subcommand("perfect", "perfectness and product spans");
    perfect->add_option("FILE", file)->required();
    auto* cohom = app.add_subcommand("cohomology", "d1/d2 ranks and H^2");
    cohom->add_option("FILE", file)->required();
    cohom->add_option("--coeffs", aux, "coefficient-space document");
    auto* hom = app.add_subcommand("homology", "d2/d3 ranks and H_2");
    hom->add_option("FILE", file)->required();
    auto* extend = app.add_subcommand("extend", "central extension along a 2-cocycle");
    extend->add_option("FILE", file)->required();
    extend->add_option("--cocycle", aux, "cocycle document")->required();
    extend->add_option("--out", out, "write the total algebra document");
    extend->add_option("--bundle", bundle, "write the extension bundle document");
    auto* crossed = app.add_subcommand("crossed", "crossed module of an extension bundle");
    crossed->add_option("FILE", file)->required();
    auto* semi = app.add_subcommand("semidirect", "validate an action and form the semidirect product");
    semi->add_option("FILE", file)->required();
    semi->add_option("--action", aux, "action document")->required();
    semi->add_option("--out", out, "write the semidirect product document");
    auto* uce = app.add_subcommand("uce", "universal central extension");
    uce->add_option("FILE", file)->required();
    uce->add_flag("--force", force, "build for a non-perfect algebra (no universality claim)");
    uce->add_option("--out", out, "write the uce algebra document");
    uce->add_option("--bundle", bundle, "write 0 -> ker u -> uce -> a -> 0 as an extension bundle");
    auto* univ = app.add_subcommand("universality", "certificate against a central extension");
    univ->add_option("FILE", file)->required();
    univ->add_option("--against", aux, "extension bundle document")->required();
    auto* morph = app.add_subcommand("morphism", "homomorphism and graph test for a linear map");
    morph->add_option("SOURCE", file)->required();
    morph->add_option("TARGET", second)->required();
    morph->add_option("--map", aux, "morphism document")->required();
    auto* builtin = app.add_subcommand("builtin", "emit a built-in example");
    builtin->add_option("NAME", second, "k3, exe02, exe02-total, exe02-cocycle, exe02-extension, exe02-action, k1-window")
        ->required();
    builtin->add_option("--param", params, "parameter k=v (mu, q, N)");
    builtin->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Report report;
    try {
        if (*check) report = cmd_check(load_algebra(file));
        else if (*perfect) report = cmd_perfect(load_algebra(file));
        else if (*cohom) {
            HomLieAntialgebra a = load_algebra(file);
            CoefficientSpace v = CoefficientSpace::trivial();
            if (!aux.empty()) v = parsing(aux, [](const std::string& t) { return parse_coefficients(t); });
            report = cmd_cohomology(a, v);
        } else if (*hom) report = cmd_homology(load_algebra(file));
        else if (*extend) {
            HomLieAntialgebra a = load_algebra(file);
            Cocycle2 w = parsing(aux, [&](const std::string& t) { return parse_cocycle(t, a); });
            try {
                CentralExtension e = central_extension_from_cocycle(a, w);
                report = extension_report(e);
                if (!out.empty()) write_output(out, emit_algebra(e.total));
                if (!bundle.empty()) write_output(bundle, emit_extension(e));
            } catch (const CheckFailure& f) {
                report = cocycle_failure_report(f);
            }
        } else if (*crossed)
            report = cmd_crossed(parsing(file, [](const std::string& t) { return parse_extension(t); }));
        else if (*semi) {
            HomLieAntialgebra a = load_algebra(file);
            ActionDocument d = parsing(aux, [&](const std::string& t) { return parse_action(t, a); });
            report = verify_action(a, d.module, d.action);
            if (report.passed()) {
                HomLieAntialgebra s = semidirect(a, d.module, d.action);
                report.dimension("dim_even", dim(s.d0()));
                report.dimension("dim_odd", dim(s.d1()));
                report.note("products", nonzero_products(s));
                if (!out.empty()) write_output(out, emit_algebra(s));
            }
        } else if (*uce) {
            HomLieAntialgebra a = load_algebra(file);
            try {
                UceResult u = build_uce(a, force);
                report = cmd_uce(u);
                if (!out.empty()) write_output(out, emit_algebra(u.uce_algebra));
                if (!bundle.empty()) write_output(bundle, emit_extension(uce_extension(u)));
            } catch (const NotPerfect& e) {
                report = e.report();
                report.note("error", e.what());
            }
        } else if (*univ) {
            HomLieAntialgebra a = load_algebra(file);
            CentralExtension e = parsing(aux, [](const std::string& t) { return parse_extension(t); });
            try {
                report = cmd_universality(build_uce(a), e);
            } catch (const NotPerfect& x) {
                report = x.report();
                report.note("error", x.what());
            }
        } else if (*morph) {
            HomLieAntialgebra s = load_algebra(file), t = load_algebra(second);
            GradedMorphism f = parsing(aux, [&](const std::string& x) { return parse_morphism(x, s, t); });
            Check h = check_homomorphism(s, t, f);
            const bool graph = is_subalgebra(direct_sum(s, t), graph_of(s, t, f));
            report.add(h);
            report.add("graph-subalgebra", graph);
            report.add("graph-criterion-agrees", graph == h.passed());
        } else if (*builtin) {
            auto p = parse_params(params);
            const Scalar mu = param_scalar(p, "mu", Scalar(2));
            for (const auto& [k, v] : p)
                if (k != "mu" && k != "q" && k != "N") throw UsageError("unknown parameter '" + k + "'");
            std::string text;
            if (second == "k3") text = emit_algebra(k3(mu));
            else if (second == "exe02") text = emit_algebra(exe02(mu));
            else if (second == "exe02-total") text = emit_algebra(exe02_extension(mu));
            else if (second == "exe02-cocycle") text = emit_cocycle(exe02(mu), exe02_cocycle(exe02(mu), mu));
            else if (second == "exe02-extension")
                text = emit_extension(central_extension_from_cocycle(exe02(mu), exe02_cocycle(exe02(mu), mu)));
            else if (second == "exe02-action") {
                CrossedModule cm = crossed_module_from_central_extension(
                    central_extension_from_cocycle(exe02(mu), exe02_cocycle(exe02(mu), mu)));
                text = emit_action(cm.base, ActionDocument{cm.v_algebra, cm.action});
            } else if (second == "k1-window") {
                const Scalar q = param_scalar(p, "q", Scalar(2)), n = param_scalar(p, "N", Scalar(3));
                if (n.get_den() != 1 || n < 1 || n > 64) throw UsageError("N must be an integer in [1, 64]");
                report = k1_report(K1Window({q, static_cast<int>(n.get_num().get_si())}).check_identities());
                command = "builtin k1-window";
            } else
                throw UsageError("unknown builtin '" + second + "'");
            if (second != "k1-window") {
                write_output(out, text);
                return 0;
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    ensure_witnesses(report);
    if (json) std::cout << to_json(report, command).dump(2) << "\n";
    else std::cout << to_text(report, command);
    return report.passed() ? 0 : 1;
}
