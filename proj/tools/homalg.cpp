// homalg: run axiom suites, act with U(sl2) on k[x,y], print twisted tables.
//
// exit codes: 0 pass, 1 axiom failure, 2 input error, 3 range escape

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homalg/homalg.hpp"
#include "homalg/report_json.hpp"

namespace {

using namespace homalg;

enum Exit { ok = 0, axiom_failure = 1, input_error = 2, range_escape = 3 };

unsigned env_bound(const char* name, unsigned fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        const long n = std::stol(v);
        if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
}

std::string read_scenario_text(const std::string& file) {
    if (file.empty() || file == "m2-example") return std::string(m2_example_scenario);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + file + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct VerifyArgs {
    std::string kind;
    unsigned bound_h = 0;
    unsigned bound_a = 0;
    bool negative_control = false;
    bool classical = false;
    std::string file;
    std::vector<std::string> suites;
    std::string report;
};

int emit(const std::string& scenario, const std::vector<CheckReport>& reports, const std::string& report_path) {
    bool all = true;
    for (const auto& r : reports) {
        std::cout << render_text(r);
        all = all && r.passed();
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.passed() ? 0 : 1;
    std::cout << scenario << ": " << reports.size() - failed << "/" << reports.size() << " suites passed\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::invalid_argument("cannot write report to '" + report_path + "'");
        out << to_json(scenario, reports).dump(2) << '\n';
    }
    return all ? ok : axiom_failure;
}

int cmd_verify(const VerifyArgs& a) {
    if (a.kind == "sl2-q") {
        Sl2Options opt;
        opt.bound_h = a.bound_h ? a.bound_h : env_bound("HOMALG_BOUND_H", opt.bound_h);
        opt.bound_a = a.bound_a ? a.bound_a : env_bound("HOMALG_BOUND_A", opt.bound_a);
        opt.classical = a.classical;
        opt.negative_control = a.negative_control;
        const auto suites = sl2_suites();
        const Sl2Scenario s = make_sl2_scenario(opt);
        return emit("sl2-q", run_suites(s, suites, a.suites), a.report);
    }
    // finalg and custom share the structure-file loader
    const auto suites = finalg_suites();
    const FinalgRun run = make_finalg_run(parse_finalg_scenario(read_scenario_text(a.file)));
    return emit(a.kind, run_suites(run, suites, a.suites), a.report);
}

int cmd_act(const std::string& z_text, const std::string& p_text, bool deformed, const std::string& q_value) {
    const UElem z = parse_uelem(z_text);
    const Poly p = parse_poly(p_text);
    Poly r = deformed ? deformed_act(DeformedAction::q_example(), z, p) : act(z, p);
    if (!q_value.empty()) r = specialize(r, parse_rational(q_value));
    std::cout << to_string(r) << '\n';
    return ok;
}

template <class Key>
void print_twist_tables(const BialgCarrier<Key>& H) {
    std::cout << "# " << H.name << "\n# mu_alpha\n";
    for (const Key& a : H.basis)
        for (const Key& b : H.basis)
            std::cout << H.show(a) << " . " << H.show(b) << " = " << render_factored(H.mul(a, b), H.show) << '\n';
    std::cout << "# Delta_alpha\n";
    const auto pair_show = [&](const std::pair<Key, Key>& k) { return H.show(k.first) + "⊗" + H.show(k.second); };
    for (const Key& a : H.basis) std::cout << H.show(a) << " -> " << render_factored(H.comul(a), pair_show) << '\n';
}

template <class Key>
void print_product_table(const AlgCarrier<Key>& A) {
    std::cout << "# " << A.name << "\n# mu_alpha\n";
    for (const Key& a : A.basis)
        for (const Key& b : A.basis)
            std::cout << A.show(a) << " . " << A.show(b) << " = " << render_factored(A.mul(a, b), A.show) << '\n';
}

int cmd_twist(bool sl2, const std::string& file, unsigned bound, bool identity) {
    if (sl2) {
        const UAlgebraMap alpha = extend_lie_endo(identity ? UEndo::identity() : UEndo::q_example());
        print_twist_tables(twist_bialgebra(enveloping_carrier(bound), as_linear_map(alpha), Verify::no));
        return ok;
    }
    const FinalgScenario sc = parse_finalg_scenario(read_scenario_text(file));
    const LinOp alpha = identity ? LinOp::identity(sc.algebra.dimension()) : sc.twist;
    const GroupTwist pkg = build_group_twist(sc.algebra, sc.group, alpha);
    print_product_table(pkg.A_alpha);
    print_twist_tables(pkg.H);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Module Hom-algebra checker"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run axiom suites on a scenario");
    verify->add_option("kind", va.kind, "sl2-q, finalg or custom")
        ->required()
        ->check(CLI::IsMember({"sl2-q", "finalg", "custom"}));
    verify->add_option("--bound-h", va.bound_h, "PBW degree bound (default 3, or HOMALG_BOUND_H)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--bound-a", va.bound_a, "polynomial degree bound (default 4, or HOMALG_BOUND_A)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--negative-control", va.negative_control, "use alpha_H instead of alpha_H^2 in the axiom");
    verify->add_flag("--classical", va.classical, "alpha = Id everywhere");
    verify->add_option("--file", va.file, "structure file, or the built-in name m2-example");
    verify->add_option("--suite", va.suites, "restrict to these suite ids")->take_all();
    verify->add_option("--report", va.report, "write a JSON report here");

    std::string z_text, p_text, q_value;
    bool deformed = false;
    auto* actc = app.add_subcommand("act", "print z . p for z in U(sl2), p in k[x,y]");
    actc->add_option("z", z_text)->required();
    actc->add_option("p", p_text)->required();
    actc->add_flag("--deformed", deformed, "apply rho_alpha = alpha_A o rho");
    actc->add_option("--q-value", q_value, "specialize q to this rational");

    bool twist_sl2 = false, twist_identity = false;
    std::string twist_file;
    unsigned twist_bound = 2;
    auto* twist = app.add_subcommand("twist", "print mu_alpha and Delta_alpha on the basis");
    auto* sl2_flag = twist->add_flag("--sl2", twist_sl2, "twist U(sl2) by the q-example");
    auto* file_opt = twist->add_option("--file", twist_file, "structure file, or m2-example");
    sl2_flag->excludes(file_opt);
    twist->add_option("--bound", twist_bound, "PBW degree bound for --sl2")->check(CLI::PositiveNumber);
    twist->add_flag("--identity", twist_identity, "use alpha = Id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*verify) {
            if (va.kind == "sl2-q" && !va.file.empty()) throw std::invalid_argument("--file applies to finalg and custom");
            if (va.kind != "sl2-q" && (va.negative_control || va.classical))
                throw std::invalid_argument("--negative-control and --classical apply to sl2-q");
            return cmd_verify(va);
        }
        if (*actc) return cmd_act(z_text, p_text, deformed, q_value);
        if (!twist_sl2 && twist_file.empty()) throw std::invalid_argument("twist needs --sl2 or --file");
        return cmd_twist(twist_sl2, twist_file, twist_bound, twist_identity);
    } catch (const RangeEscape& e) {
        std::cerr << "range escape: " << e.what() << '\n';
        return range_escape;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (!e.report().axiom.empty()) std::cerr << render_text(e.report());
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
}
