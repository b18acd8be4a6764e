// Command-line surface for symbol evaluation, constructions, law
// verification, range sweeps and genus exploration.
//
// Exit codes: 0 success (all matches), 1 usage or input error,
// 2 at least one law mismatch (a counterexample means an implementation
// bug: the theorems are proved), 3 internal invariant violation.

#include "rqr/rqr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace rqr;

/// Oracle cross-checks for --oracle mode: re-derive the symbol
/// ingredients of a report through the brute-force paths where the
/// oracle scale allows it. Returns nullopt when out of oracle range.
std::optional<bool> oracle_check(Law law, i64 m, i64 n)
{
    switch (law) {
    case Law::ec: {
        // right side per prime factor via fourth-power scan
        i64 p = n;
        if (p >= 100000)
            return std::nullopt;
        i64 modd = m % 2 == 0 ? m / 8 : m;
        for (i64 pj : four_one_factors(modd)) {
            bool scan = quartic_residue_bruteforce(p, pj);
            if (scan != (quartic_symbol_prime(p, pj) == 1))
                return false;
        }
        if (p < 10000) {
            i64 s = sqrt_mod_prime(modd % p == 0 ? 1 : modd % p, p);
            if (!sqrt_bruteforce(modd % p, p).count(s))
                return false;
        }
        return true;
    }
    case Law::gauss2: {
        if (m >= 100000)
            return std::nullopt;
        return quartic_residue_bruteforce(2, m) == (quartic_symbol_prime(2, m) == 1);
    }
    case Law::scholz:
    case Law::scholz_mutual:
    case Law::furuta: {
        if (m >= 500)
            return std::nullopt;
        auto unit = fundamental_negative_unit(m);
        auto brute = pell_bruteforce(m, 1000000);
        if (unit && unit->u <= 1000000)
            return brute && unit->t == brute->first && unit->u == brute->second;
        return !brute;
    }
    case Law::burde: {
        // canonical representation must appear in the exhaustive list
        if (m > 1000000)
            return std::nullopt;
        auto rep = two_squares_composite(m);
        for (const auto& r : all_two_squares(m))
            if (r.a == rep.a && r.b == rep.b)
                return true;
        return false;
    }
    }
    return std::nullopt;
}

void print_report(const LawReport& r, const std::string& format, bool oracle, Law law, i64 m, i64 n)
{
    auto j = to_json(r);
    if (oracle) {
        auto ok = oracle_check(law, m, n);
        j["oracle_ok"] = ok ? nlohmann::ordered_json(*ok) : nlohmann::ordered_json(nullptr);
    }
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "law: " << r.law << "\n";
    for (const auto& [k, v] : r.inputs)
        std::cout << "  " << k << " = " << v << "\n";
    if (r.skipped) {
        std::cout << "  skipped: " << *r.skipped << "\n";
    } else {
        std::cout << "  sides:";
        for (int s : r.sides)
            std::cout << " " << (s > 0 ? "+1" : "-1");
        std::cout << "\n  match: " << (r.match ? "yes" : "NO") << "\n";
    }
    if (oracle)
        std::cout << "  oracle: " << j["oracle_ok"].dump() << "\n";
}

int run(int argc, char** argv)
{
    CLI::App app{"rational quartic reciprocity toolkit"};
    app.require_subcommand(1);

    // symbol
    auto* symbol = app.add_subcommand("symbol", "evaluate residue symbols");
    symbol->require_subcommand(1);
    i64 sym_a = 0, sym_n = 0;
    auto* sym_jacobi = symbol->add_subcommand("jacobi", "Jacobi symbol (a/n)");
    sym_jacobi->add_option("a", sym_a)->required();
    sym_jacobi->add_option("n", sym_n)->required();
    auto* sym_quartic = symbol->add_subcommand("quartic", "quartic symbol (a/m)_4");
    sym_quartic->add_option("a", sym_a)->required();
    sym_quartic->add_option("m", sym_n)->required();
    auto* sym_quartic2 = symbol->add_subcommand("quartic2", "quartic symbol (p/2)_4");
    sym_quartic2->add_option("p", sym_a)->required();

    // constructions
    i64 arg_m = 0;
    auto* decompose = app.add_subcommand("decompose", "canonical m = a^2 + b^2");
    decompose->add_option("m", arg_m)->required();
    auto* alpha_cmd = app.add_subcommand("alpha", "normalized triple A B C with A^2 = m(B^2+C^2)");
    alpha_cmd->add_option("m", arg_m)->required();
    auto* unit_cmd = app.add_subcommand("unit", "minimal t u with t^2 - m u^2 = -1");
    unit_cmd->add_option("m", arg_m)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify one law instance");
    std::string verify_law;
    i64 v_m = 0, v_n = 0, v_p = 0;
    std::string format = "table";
    bool oracle = false;
    verify->add_option("law", verify_law, "ec|burde|gauss2|scholz|scholz-mutual|furuta")->required();
    verify->add_option("--m", v_m);
    verify->add_option("--n", v_n);
    verify->add_option("--p", v_p);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    verify->add_flag("--oracle", oracle, "cross-check ingredients against brute-force oracles");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep a law over ranges");
    std::string sweep_law;
    i64 m_max = 0, n_max = 0, p_max = 0;
    int jobs = 1;
    std::string out_path;
    sweep_cmd->add_option("law", sweep_law)->required();
    sweep_cmd->add_option("--m-max", m_max);
    sweep_cmd->add_option("--n-max", n_max);
    sweep_cmd->add_option("--p-max", p_max);
    sweep_cmd->add_option("--jobs", jobs);
    sweep_cmd->add_option("--out", out_path, "write per-instance JSON lines here");

    // genus
    auto* genus_cmd = app.add_subcommand("genus", "C4 splits of a discriminant");
    i64 g_d = 0;
    genus_cmd->add_option("--d", g_d)->required();
    genus_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    if (sym_jacobi->parsed()) {
        std::cout << jacobi(sym_a, sym_n) << "\n";
        return 0;
    }
    if (sym_quartic->parsed()) {
        std::cout << quartic_symbol_composite(sym_a, sym_n) << "\n";
        return 0;
    }
    if (sym_quartic2->parsed()) {
        std::cout << quartic_symbol_two(sym_a) << "\n";
        return 0;
    }
    if (decompose->parsed()) {
        auto r = two_squares_composite(arg_m);
        std::cout << r.a << " " << r.b << "\n";
        return 0;
    }
    if (alpha_cmd->parsed()) {
        auto t = alpha_triple(arg_m);
        std::cout << t.A << " " << t.B << " " << t.C << "\n";
        return 0;
    }
    if (unit_cmd->parsed()) {
        auto e = fundamental_negative_unit(arg_m);
        if (!e) {
            std::cerr << "no negative norm unit for m = " << arg_m << "\n";
            return 1;
        }
        std::cout << e->t << " " << e->u << "\n";
        return 0;
    }
    if (verify->parsed()) {
        auto law = law_from_name(verify_law);
        if (!law) {
            std::cerr << "unknown law: " << verify_law << "\n";
            return 1;
        }
        i64 second = v_n != 0 ? v_n : v_p;
        LawReport r;
        switch (*law) {
        case Law::ec: r = verify_ec(v_m, second); break;
        case Law::burde: r = verify_burde(v_m, second); break;
        case Law::gauss2: r = verify_gauss2(v_p != 0 ? v_p : v_m); break;
        case Law::scholz: r = verify_scholz(v_m, second); break;
        case Law::scholz_mutual: r = verify_scholz_mutual(v_m, second); break;
        case Law::furuta: r = verify_furuta(v_m, second); break;
        }
        i64 om = *law == Law::gauss2 ? (v_p != 0 ? v_p : v_m) : v_m;
        print_report(r, format, oracle, *law, om, second);
        return (!r.skipped && !r.match) ? 2 : 0;
    }
    if (sweep_cmd->parsed()) {
        auto law = law_from_name(sweep_law);
        if (!law) {
            std::cerr << "unknown law: " << sweep_law << "\n";
            return 1;
        }
        i64 second = n_max != 0 ? n_max : p_max;
        auto res = sweep(*law, m_max, second, jobs);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open " << out_path << "\n";
                return 1;
            }
            out << sweep_json_lines(res);
        }
        std::cout << sweep_summary_json(*law, res).dump() << "\n";
        for (const auto& c : res.counterexamples)
            std::cerr << "counterexample: " << to_json(c).dump() << "\n";
        return res.counterexamples.empty() ? 0 : 2;
    }
    if (genus_cmd->parsed()) {
        auto r = explore(g_d);
        if (format == "json") {
            std::cout << to_json(r).dump() << "\n";
        } else {
            std::cout << "d = " << r.d << "\n";
            for (const auto& s : r.splits) {
                std::cout << "  " << s.d1 << " * " << s.d2 << "  c4=" << (s.is_c4 ? "yes" : "no");
                if (s.scholz_equal)
                    std::cout << "  scholz_equal=" << (*s.scholz_equal ? "yes" : "no");
                std::cout << "\n";
            }
            std::cout << "c4_count = " << r.c4_count << ", real_count = " << r.real_count << "\n";
        }
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
