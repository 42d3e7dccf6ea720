// lgv: exact lattice-path combinatorics from the command line.
//
//   schur      skew Schur polynomial by tableau sum and/or h-matrix determinant
//   jt         show or verify the h-matrix of a shape
//   verify     run an identity check (symbolic, Schur, or integer fuzz route)
//   fuzz       integer-fuzz route shortcut
//   enumerate  tableaux, signed path tuples, or overlays
//   render     SVG figures for path families and overlays
//
// Exit codes: 0 pass, 1 identity failure, 2 usage or budget error.

#include <CLI11.hpp>

#include "lgv/identities.hpp"
#include "lgv/jacobitrudi.hpp"
#include "lgv/jsonio.hpp"
#include "lgv/overlays.hpp"
#include "lgv/paths.hpp"
#include "lgv/svg.hpp"
#include "lgv/tableaux.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace lgv;

long long default_budget() {
    if (const char* env = std::getenv("LGV_MAX_ENUM")) return std::atoll(env);
    return 2'000'000;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

int cmd_schur(const std::string& shape_text, int n, const std::string& route, bool json,
              long long budget) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    std::optional<MultiPoly> by_tableaux, by_matrix;
    if (route == "tableaux" || route == "both") by_tableaux = skew_schur(sh, n, budget);
    if (route == "jacobitrudi" || route == "both") by_matrix = det(jt_matrix(sh, n));
    const MultiPoly& poly = by_tableaux ? *by_tableaux : *by_matrix;
    const bool agree = !by_tableaux || !by_matrix || *by_tableaux == *by_matrix;
    if (json) {
        Json j{{"schema", "lgv-schur/1"},
               {"shape", sh.str()},
               {"n", n},
               {"route", route},
               {"polynomial", poly.str()}};
        if (by_tableaux && by_matrix) j["routes_agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << poly.str() << "\n";
        if (by_tableaux && by_matrix)
            std::cout << "routes agree: " << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_jt_show(const std::string& shape_text, int n) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    const int m = sh.length();
    std::cout << "h-matrix of " << sh.str() << " in x1..x" << n << " (" << m << "x" << m << ")\n";
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const int r = jt_entry_index(sh, i, j);
            std::string cell = r < 0 ? "0" : (r == 0 ? "1" : "h" + std::to_string(r));
            std::cout << cell << std::string(cell.size() < 6 ? 6 - cell.size() : 1, ' ');
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_jt_verify(const std::string& shape_text, int n, bool json, long long budget) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    const MultiPoly lhs = skew_schur(sh, n, budget);
    const MultiPoly rhs = det(jt_matrix(sh, n));
    const bool pass = lhs == rhs;
    Verdict v = pass ? Verdict::passed("jacobi-trudi", "shape=" + sh.str() + " n=" + std::to_string(n),
                                       Route::SchurSymbolic)
                     : Verdict::failed("jacobi-trudi", "shape=" + sh.str() + " n=" + std::to_string(n),
                                       Route::SchurSymbolic,
                                       "tableau sum " + lhs.str() + " != determinant " + rhs.str());
    if (json) std::cout << verdict_to_json(v).dump(2) << "\n";
    else
        std::cout << "jacobi-trudi " << sh.str() << " n=" << n << ": " << (pass ? "pass" : "FAIL")
                  << "\n";
    return pass ? 0 : 1;
}

struct VerifyArgs {
    std::string identity;
    std::string route = "auto";
    IdentityParams params;
    std::string lambda_csv, R_csv, C_csv, I_csv, cols_csv;
    long long trials = 100;
    std::uint64_t seed = 1;
    long long budget = default_budget();
};

int cmd_verify(VerifyArgs& a) {
    a.params.R = parse_int_list(a.R_csv);
    a.params.C = parse_int_list(a.C_csv);
    a.params.I = parse_int_list(a.I_csv);
    a.params.cols = parse_int_list(a.cols_csv);
    a.params.lambda = parse_int_list(a.lambda_csv);
    if (!a.params.I.empty()) a.params.size_i = static_cast<int>(a.params.I.size());
    if (!a.params.R.empty()) a.params.size_r = static_cast<int>(a.params.R.size());

    std::string route = a.route;
    if (route == "auto")
        route = (a.identity == "dodgson-schur" || a.identity == "dodgson-bijection") ? "schur" : "fuzz";

    Verdict v;
    if (route == "schur") {
        if (a.identity == "dodgson-schur")
            v = check_dodgson_schur(partition(a.params.lambda), a.params.n, a.budget);
        else if (a.identity == "dodgson-bijection")
            v = verify_dodgson_bijection(partition(a.params.lambda), a.params.n, a.budget);
        else
            throw Error("identity has no schur route: " + a.identity);
    } else if (route == "generic") {
        v = run_symbolic(a.identity, a.params);
    } else if (route == "fuzz") {
        v = fuzz(a.identity, a.params, a.trials, a.seed);
    } else {
        throw Error("unknown route: " + route);
    }
    std::cout << verdict_to_json(v).dump(2) << "\n";
    return v.pass ? 0 : 1;
}

int cmd_enumerate_tableaux(const std::string& shape_text, int n, long long limit, bool json,
                           long long budget) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    long long count = 0;
    MultiPoly gf;
    std::string listing;
    for_each_ssyt(sh, n, [&](const Tableau& t) {
        if (!json && count < limit) listing += tableau_layout(t) + "\n";
        gf.add_term(tableau_weight(t), 1);
        ++count;
        return true;
    }, budget);
    if (json) {
        std::cout << Json{{"schema", "lgv-enumerate/1"},
                          {"kind", "tableaux"},
                          {"shape", sh.str()},
                          {"n", n},
                          {"count", count},
                          {"polynomial", gf.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << listing;
        if (count > limit) std::cout << "... (" << count - limit << " more)\n";
        std::cout << "count: " << count << "\npolynomial: " << gf.str() << "\n";
    }
    return 0;
}

int cmd_enumerate_tuples(const std::string& shape_text, int n, bool json, long long budget) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    long long total = 0, nonintersecting = 0;
    MultiPoly signed_sum;
    for_each_signed_tuple(sh, n, [&](const PathTuple& t) {
        ++total;
        if (is_nonintersecting(t)) ++nonintersecting;
        signed_sum.add_term(weight(t), sign(t));
        return true;
    }, budget);
    const MultiPoly schur = skew_schur(sh, n, budget);
    const bool agree = signed_sum == schur;
    if (json) {
        std::cout << Json{{"schema", "lgv-enumerate/1"},
                          {"kind", "tuples"},
                          {"shape", sh.str()},
                          {"n", n},
                          {"tuples", total},
                          {"nonintersecting", nonintersecting},
                          {"signed_sum", signed_sum.str()},
                          {"matches_schur", agree}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "tuples: " << total << " (nonintersecting: " << nonintersecting << ")\n"
                  << "signed sum: " << signed_sum.str() << "\n"
                  << "matches tableau route: " << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_enumerate_overlays(const std::string& shape1, int shift1, const std::string& shape2,
                           int shift2, int n, bool json, long long budget) {
    const Shape sh1 = shift_normalize(parse_shape(shape1));
    const Shape sh2 = shift_normalize(parse_shape(shape2));
    const auto overlays = enumerate_overlays(sh1, shift1, sh2, shift2, n, budget);
    const MultiPoly gf = overlay_gf(overlays);
    if (json) {
        std::cout << Json{{"schema", "lgv-enumerate/1"},
                          {"kind", "overlays"},
                          {"shape1", sh1.str()},
                          {"shape2", sh2.str()},
                          {"n", n},
                          {"count", overlays.size()},
                          {"polynomial", gf.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "overlays: " << overlays.size() << "\npolynomial: " << gf.str() << "\n";
    }
    return 0;
}

int cmd_render_paths(const std::string& shape_text, int n, long long index, const std::string& out,
                     const SvgOptions& opt, long long budget) {
    const Shape sh = shift_normalize(parse_shape(shape_text));
    std::optional<Tableau> picked;
    long long i = 0;
    for_each_ssyt(sh, n, [&](const Tableau& t) {
        if (i++ == index) {
            picked = t;
            return false;
        }
        return true;
    }, budget);
    if (!picked) throw Error("tableau index out of range");
    const std::string svg = svg_paths(tableau_to_paths(*picked), opt);
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot write " + out);
    f << svg;
    return 0;
}

int cmd_render_overlay(const std::string& lambda_csv, int n, int orientation, long long index,
                       bool highlight, const std::string& out, const SvgOptions& opt,
                       long long budget) {
    const Partition lambda = partition(parse_int_list(lambda_csv));
    const DodgsonInstance inst = dodgson_orientation(lambda, orientation);
    const auto overlays = enumerate_overlays(inst.green, inst.red, n, budget);
    if (index < 0 || index >= static_cast<long long>(overlays.size()))
        throw Error("overlay index out of range (set has " + std::to_string(overlays.size()) + ")");
    const Overlay& o = overlays[static_cast<std::size_t>(index)];
    std::string svg;
    if (highlight) {
        const BicolouredTrail t = trail_from(o, Point{lambda.part(1) - 1, n});
        svg = svg_overlay(o, opt, &t);
    } else {
        svg = svg_overlay(o, opt);
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot write " + out);
    f << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nonintersecting-lattice-path combinatorics"};
    app.require_subcommand(1);
    int rc = 0;

    // schur
    std::string schur_shape, schur_route = "both";
    int schur_n = 0;
    bool schur_json = false;
    long long schur_budget = default_budget();
    auto* schur = app.add_subcommand("schur", "skew Schur polynomial of a shape");
    schur->add_option("shape", schur_shape, "shape, e.g. 2,1/0")->required();
    schur->add_option("n", schur_n, "number of variables")->required();
    schur->add_option("--route", schur_route, "tableaux | jacobitrudi | both")
        ->check(CLI::IsMember({"tableaux", "jacobitrudi", "both"}));
    schur->add_flag("--json", schur_json, "JSON output");
    schur->add_option("--max-tableaux", schur_budget, "enumeration budget");
    schur->callback([&] { rc = cmd_schur(schur_shape, schur_n, schur_route, schur_json, schur_budget); });

    // jt
    auto* jt = app.add_subcommand("jt", "h-matrix of a shape");
    jt->require_subcommand(1);
    std::string jt_shape;
    int jt_n = 0;
    bool jt_json = false;
    long long jt_budget = default_budget();
    auto* jt_show = jt->add_subcommand("show", "print the matrix with h-indices");
    jt_show->add_option("shape", jt_shape)->required();
    jt_show->add_option("n", jt_n)->required();
    jt_show->callback([&] { rc = cmd_jt_show(jt_shape, jt_n); });
    auto* jt_ver = jt->add_subcommand("verify", "determinant vs tableau sum");
    jt_ver->add_option("shape", jt_shape)->required();
    jt_ver->add_option("n", jt_n)->required();
    jt_ver->add_flag("--json", jt_json);
    jt_ver->add_option("--max-tableaux", jt_budget, "enumeration budget");
    jt_ver->callback([&] { rc = cmd_jt_verify(jt_shape, jt_n, jt_json, jt_budget); });

    // verify / fuzz
    VerifyArgs va;
    auto add_verify_options = [&](CLI::App* cmd, bool fixed_fuzz) {
        cmd->add_option("identity", va.identity, "identity name")->required();
        cmd->add_option("--m", va.params.m);
        cmd->add_option("--k", va.params.k);
        cmd->add_option("--n", va.params.n);
        cmd->add_option("--j", va.params.j, "column for the Laplace expansion");
        cmd->add_option("--R", va.R_csv, "row/column set, e.g. 1,3");
        cmd->add_option("--C", va.C_csv);
        cmd->add_option("--I", va.I_csv);
        cmd->add_option("--cols", va.cols_csv, "fixed columns (pluecker-general)");
        cmd->add_option("--lambda", va.lambda_csv, "partition, e.g. 3,2,1");
        cmd->add_option("--size-r", va.params.size_r, "size of R when drawn per trial");
        cmd->add_option("--size-i", va.params.size_i, "size of I when drawn per trial");
        cmd->add_option("--trials", va.trials);
        cmd->add_option("--seed", va.seed);
        cmd->add_option("--entry-lo", va.params.entry_lo);
        cmd->add_option("--entry-hi", va.params.entry_hi);
        cmd->add_option("--max-tableaux", va.budget, "enumeration budget (schur route)");
        if (!fixed_fuzz)
            cmd->add_option("--route", va.route, "auto | generic | schur | fuzz")
                ->check(CLI::IsMember({"auto", "generic", "schur", "fuzz"}));
    };
    auto* verify = app.add_subcommand("verify", "verify an identity");
    add_verify_options(verify, false);
    verify->callback([&] { rc = cmd_verify(va); });
    auto* fz = app.add_subcommand("fuzz", "integer-fuzz an identity");
    add_verify_options(fz, true);
    fz->callback([&] {
        va.route = "fuzz";
        rc = cmd_verify(va);
    });

    // enumerate
    auto* en = app.add_subcommand("enumerate", "tableaux, signed tuples, or overlays");
    en->require_subcommand(1);
    std::string en_shape, en_shape2 = "0/0";
    int en_n = 0, en_shift1 = 0, en_shift2 = 0;
    bool en_json = false;
    long long en_limit = 50, en_budget = default_budget();
    auto* en_tab = en->add_subcommand("tableaux", "all semistandard tableaux of a shape");
    en_tab->add_option("shape", en_shape)->required();
    en_tab->add_option("n", en_n)->required();
    en_tab->add_flag("--json", en_json);
    en_tab->add_option("--limit", en_limit, "print at most this many");
    en_tab->add_option("--max-tableaux", en_budget, "enumeration budget");
    en_tab->callback([&] { rc = cmd_enumerate_tableaux(en_shape, en_n, en_limit, en_json, en_budget); });
    auto* en_tup = en->add_subcommand("tuples", "signed expansion tuples of a shape");
    en_tup->add_option("shape", en_shape)->required();
    en_tup->add_option("n", en_n)->required();
    en_tup->add_flag("--json", en_json);
    en_tup->add_option("--max-tuples", en_budget, "enumeration budget");
    en_tup->callback([&] { rc = cmd_enumerate_tuples(en_shape, en_n, en_json, en_budget); });
    auto* en_ov = en->add_subcommand("overlays", "overlays of two shapes");
    en_ov->add_option("shape", en_shape)->required();
    en_ov->add_option("n", en_n)->required();
    en_ov->add_option("--shape2", en_shape2, "second shape");
    en_ov->add_option("--shift1", en_shift1);
    en_ov->add_option("--shift2", en_shift2);
    en_ov->add_flag("--json", en_json);
    en_ov->add_option("--max-overlays", en_budget, "enumeration budget");
    en_ov->callback([&] {
        rc = cmd_enumerate_overlays(en_shape, en_shift1, en_shape2, en_shift2, en_n, en_json, en_budget);
    });

    // render
    auto* render = app.add_subcommand("render", "SVG figures");
    render->require_subcommand(1);
    std::string r_shape, r_lambda, r_out = "out.svg";
    int r_n = 0, r_orientation = 1;
    long long r_index = 0, r_budget = default_budget();
    bool r_highlight = false, r_nolabels = false;
    SvgOptions opt;
    auto* rp = render->add_subcommand("paths", "path family of one tableau");
    rp->add_option("--shape", r_shape)->required();
    rp->add_option("--n", r_n)->required();
    rp->add_option("--tableau-index", r_index);
    rp->add_option("--out", r_out);
    rp->add_option("--color", opt.single, "stroke color");
    rp->add_flag("--no-labels", r_nolabels);
    rp->add_option("--max-tableaux", r_budget, "enumeration budget");
    rp->callback([&] {
        opt.labels = !r_nolabels;
        rc = cmd_render_paths(r_shape, r_n, r_index, r_out, opt, r_budget);
    });
    auto* ro = render->add_subcommand("overlay", "overlay from a condensation instance");
    ro->add_option("--lambda", r_lambda)->required();
    ro->add_option("--n", r_n)->required();
    ro->add_option("--orientation", r_orientation, "1, 2 or 3");
    ro->add_option("--index", r_index);
    ro->add_flag("--highlight-trail", r_highlight, "highlight the trail from the rightmost upper point");
    ro->add_option("--out", r_out);
    ro->add_option("--green", opt.green);
    ro->add_option("--red", opt.red);
    ro->add_option("--max-overlays", r_budget, "enumeration budget");
    ro->callback([&] {
        opt.labels = !r_nolabels;
        rc = cmd_render_overlay(r_lambda, r_n, r_orientation, r_index, r_highlight, r_out, opt, r_budget);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lgv::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise the budget flag or LGV_MAX_ENUM)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
