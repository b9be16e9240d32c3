#include "nikulin/catalog.hpp"
#include "nikulin/disc_form.hpp"
#include "nikulin/riemann_roch.hpp"
#include "nikulin/tables.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <regex>

using namespace nikulin;

namespace {

constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long max_d() {
    const char* env = std::getenv("NIKULIN_MAX_D");
    if (!env || !*env) return 12;
    try {
        return std::stol(env);
    } catch (const std::exception&) {
        throw UsageError("NIKULIN_MAX_D is not a number");
    }
}

std::pair<long, long> parse_range(const std::string& s) {
    std::smatch m;
    if (std::regex_match(s, m, std::regex(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)")))
        return {std::stol(m[1]), std::stol(m[2])};
    if (std::regex_match(s, m, std::regex(R"(\s*(\d+)\s*)"))) return {std::stol(m[1]), std::stol(m[1])};
    throw UsageError("--d expects n or a..b, got '" + s + "'");
}

struct LatticeArgs {
    std::string name, gram, json;
    long param = 0;
};

void add_lattice_options(CLI::App* sub, LatticeArgs& a) {
    auto* n = sub->add_option("--name", a.name, "catalog name (see `lattice list`)");
    sub->add_option("--param", a.param, "parameter d or n for parametrized names");
    auto* g = sub->add_option("--gram", a.gram, "Gram matrix as JSON, e.g. [[0,1],[1,0]]");
    auto* j = sub->add_option("--json", a.json, "lattice JSON {\"rank\",\"gram\",\"labels\"}");
    n->excludes(g)->excludes(j);
    g->excludes(j);
}

Lattice load_lattice(const LatticeArgs& a) {
    if (!a.name.empty()) {
        if (catalog::takes_parameter(a.name) && a.param == 0) throw UsageError(a.name + " needs --param");
        return catalog::make(a.name, a.param);
    }
    if (!a.gram.empty()) return lattice_from_json(nlohmann::json::parse(a.gram));
    if (!a.json.empty()) return lattice_from_json(nlohmann::json::parse(a.json));
    throw UsageError("give one of --name, --gram, --json");
}

std::string sig_text(const Signature& s) {
    return "(" + std::to_string(s.plus) + "," + std::to_string(s.zero) + "," + std::to_string(s.minus) + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice computations for symplectic involutions on K3^[2]-type manifolds"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "print one of the tables");
    std::string table_name, d_arg = "1..4", variant_arg;
    bool as_json = false;
    table->add_option("name", table_name, "picx | modelsx | nsy | projy")->required()->check(
        CLI::IsMember(table_names()));
    table->add_option("--d", d_arg, "n or a..b");
    table->add_option("--variant", variant_arg, "j1 | j2 | j3 | jtilde");
    table->add_flag("--json", as_json, "emit a versioned JSON document");

    // lattice
    auto* lat = app.add_subcommand("lattice", "lattice utilities");
    lat->require_subcommand(1);
    LatticeArgs la, lb;
    auto* l_disc = lat->add_subcommand("disc", "discriminant form");
    add_lattice_options(l_disc, la);
    auto* l_sig = lat->add_subcommand("sig", "signature as (plus,zero,minus)");
    add_lattice_options(l_sig, la);
    auto* l_show = lat->add_subcommand("show", "print the lattice as JSON");
    add_lattice_options(l_show, la);
    auto* l_comp = lat->add_subcommand("complement", "orthogonal complement of rows");
    add_lattice_options(l_comp, la);
    std::string rows_arg, glue_arg;
    l_comp->add_option("--rows", rows_arg, "integer rows as JSON")->required();
    auto* l_over = lat->add_subcommand("overlattice", "overlattice generated by glue vectors");
    add_lattice_options(l_over, la);
    l_over->add_option("--glue", glue_arg, "rational rows as JSON, entries \"p/q\" or integers")->required();
    auto* l_genus = lat->add_subcommand("genus", "compare genera of two lattices");
    add_lattice_options(l_genus, la);
    l_genus->add_option("--other-name", lb.name, "second lattice, catalog name");
    l_genus->add_option("--other-param", lb.param, "parameter of the second lattice");
    l_genus->add_option("--other-gram", lb.gram, "second lattice, Gram as JSON");
    auto* l_list = lat->add_subcommand("list", "catalog names");

    // chi
    auto* chi = app.add_subcommand("chi", "Riemann-Roch on the orbifold");
    bool cartier = false, weil = false, orbifold = false, require_integer = false;
    std::string q_arg;
    long qL = 0, m = 0, n_nc = 0, d = 0, k = 0;
    auto* f_c = chi->add_flag("--cartier", cartier, "Cartier divisor of square --q");
    auto* f_w = chi->add_flag("--weil", weil, "D = (m/2) L with q(L) = --qL");
    auto* f_o = chi->add_flag("--orbifold", orbifold, "D_i from q(H) = 2d and the coefficient k of Sigma");
    f_c->excludes(f_w)->excludes(f_o);
    f_w->excludes(f_o);
    chi->add_option("--q", q_arg, "BBF square, may be p/q");
    chi->add_option("--qL", qL, "square of the Cartier class L");
    chi->add_option("--m", m, "odd multiple");
    chi->add_option("--N", n_nc, "number of singular points where the divisor is not Cartier");
    chi->add_option("--d", d, "half the square of H on the double cover");
    chi->add_option("--k", k, "0 or -1");
    chi->add_flag("--require-integer", require_integer, "exit 2 unless the value is an integer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (table->parsed()) {
            auto [lo, hi] = parse_range(d_arg);
            if (lo < 1 || hi < lo) throw UsageError("empty d range");
            if (hi > max_d()) throw UsageError("d exceeds NIKULIN_MAX_D=" + std::to_string(max_d()));
            std::optional<Kind> only;
            if (!variant_arg.empty()) only = parse_kind(variant_arg);
            if (only && lo == hi) validate({*only, lo});
            TableDocument doc = build_table(table_name, lo, hi, only);
            if (doc.rows.empty()) throw UsageError("no valid (variant, d) in " + d_arg);
            if (as_json) std::cout << to_json(doc).dump(2) << '\n';
            else std::cout << render_text(doc);
            return doc.all_pass() ? 0 : kFailed;
        }
        if (lat->parsed()) {
            if (l_list->parsed()) {
                for (auto& n : catalog::names())
                    std::cout << n << (catalog::takes_parameter(n) ? " --param" : "") << '\n';
                return 0;
            }
            Lattice l = load_lattice(la);
            if (l_disc->parsed()) {
                std::cout << describe(discriminant_form(l)) << '\n';
            } else if (l_sig->parsed()) {
                std::cout << sig_text(l.signature()) << '\n';
            } else if (l_show->parsed()) {
                std::cout << to_json(l).dump() << '\n';
            } else if (l_comp->parsed()) {
                IntMatrix rows = gram_from_json(nlohmann::json::parse(rows_arg));
                std::cout << to_json(orthogonal_complement(l, rows).induced()).dump() << '\n';
            } else if (l_over->parsed()) {
                auto j = nlohmann::json::parse(glue_arg);
                RatMatrix glue(0, 0);
                for (auto& row : j) {
                    RatVector v;
                    for (auto& x : row) v.push_back(rational_from_json(x));
                    glue.append_row(v);
                }
                Overlattice o = overlattice(l, glue);
                std::cout << "index " << o.index.get_str() << '\n' << to_json(o.lattice).dump() << '\n';
            } else if (l_genus->parsed()) {
                Lattice other = load_lattice(lb);
                bool same = genus_equal(l, other);
                std::cout << (same ? "same genus" : "different genus") << '\n';
                return same ? 0 : kFailed;
            }
            return 0;
        }
        if (chi->parsed()) {
            Rational value;
            if (cartier) {
                if (q_arg.empty()) throw UsageError("--cartier needs --q");
                value = chi_cartier_rational(rational_from_json(nlohmann::json(q_arg)));
            } else if (weil) {
                if (chi->count("--qL") == 0 || chi->count("--m") == 0) throw UsageError("--weil needs --qL and --m");
                value = chi_weil(qL, m, n_nc);
            } else if (orbifold) {
                if (chi->count("--d") == 0) throw UsageError("--orbifold needs --d");
                value = chi_orbifold(d, k, n_nc);
            } else {
                throw UsageError("choose --cartier, --weil or --orbifold");
            }
            std::cout << value.get_str() << '\n';
            if (require_integer && value.get_den() != 1) return kFailed;
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
