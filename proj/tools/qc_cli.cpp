// quinticert: command-line driver over the built-in surface catalog.
#include "qc/parse.hpp"
#include "qc/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qc;

namespace {

struct Common {
    std::uint64_t seed = 20240605;
    int chart = -1;
    int action = 0;
    bool json_out = false;
    bool transcript = false;
    bool quiet = false;
};

void add_common(CLI::App* app, Common& c, bool with_action) {
    app->add_option("--seed", c.seed, "random seed (shape position, line choices)");
    app->add_option("--chart", c.chart, "restrict singular-scheme work to one affine chart")->check(CLI::Range(0, 3));
    if (with_action) app->add_option("--action", c.action, "use the action a_k")->check(CLI::Range(0, 4));
    app->add_flag("--json", c.json_out, "print the report as JSON");
    app->add_flag("--transcript", c.transcript, "include the computation transcript");
    app->add_flag("-q,--quiet", c.quiet, "no progress on stderr");
}

RunOptions options(const Common& c) {
    RunOptions o;
    o.seed = c.seed;
    o.chart = c.chart;
    o.action = c.action;
    if (!c.quiet) o.log = [](const std::string& s) { std::cerr << s << std::endl; };
    return o;
}

int emit(const Report& R, const Common& c) {
    if (c.json_out) {
        std::cout << R.to_json(c.transcript).dump(2) << "\n";
    } else {
        for (const auto& s : R.stages) std::cout << (s.pass ? "[pass] " : "[FAIL] ") << s.name << ": " << s.detail << "\n";
        if (R.body.contains("notes"))
            for (const auto& n : R.body["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
        if (c.transcript)
            for (const auto& t : R.transcript) std::cout << "  " << t << "\n";
        std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
    }
    return R.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificates for Z5-invariant quintic surfaces with 15 cusps"};
    app.require_subcommand(1);

    Common c_sr, c_rc, c_dv, c_ib;
    std::string sr_name, dv_name, quartic_file;
    bool search = false;
    int max_degree = 5;

    auto* sr = app.add_subcommand("surface-report", "singular points, types, orbits and free action");
    sr->add_option("surface", sr_name, "catalog name or file with a polynomial")->required();
    add_common(sr, c_sr, true);

    auto* rc = app.add_subcommand("reproduce-construction", "nodes -> invariant quintics -> cusps -> quintic");
    add_common(rc, c_rc, true);
    rc->add_option("--quartic-file", quartic_file, "replace the catalog quartic");
    rc->add_flag("--search", search, "experimental: solve the search conditions for the quartic coefficients");

    auto* dv = app.add_subcommand("divisibility", "tropes -> curve classes -> lattice -> 3-divisibility");
    dv->add_option("surface", dv_name, "catalog name or file with a polynomial")->required();
    add_common(dv, c_dv, false);

    auto* ib = app.add_subcommand("invariant-basis", "invariant monomial counts per degree and action");
    ib->add_option("--max-degree", max_degree, "largest degree")->check(CLI::Range(1, 12));
    add_common(ib, c_ib, false);

    auto* cat = app.add_subcommand("catalog", "list or print the built-in surfaces");
    std::string cat_name;
    cat->add_option("surface", cat_name, "entry to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sr) return emit(surface_report(load_surface(sr_name), options(c_sr)), c_sr);
        if (*rc) {
            std::optional<Poly<Cyclo>> Q;
            if (!quartic_file.empty()) {
                auto e = load_surface(quartic_file);
                if (e.degree != 4) throw InputError(quartic_file + ": not a quartic");
                Q = e.F;
            }
            return emit(reproduce_construction(options(c_rc), Q, search), c_rc);
        }
        if (*dv) return emit(divisibility(load_surface(dv_name), options(c_dv)), c_dv);
        if (*ib) return emit(invariant_basis_table(max_degree), c_ib);
        if (*cat) {
            if (cat_name.empty()) {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
            } else {
                auto e = load_surface(cat_name);
                std::cout << print_poly(e.F) << "\n";
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
