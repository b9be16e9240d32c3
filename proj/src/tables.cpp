#include "nikulin/tables.hpp"

#include "nikulin/disc_form.hpp"
#include "nikulin/mukai.hpp"
#include "nikulin/quotient.hpp"
#include "nikulin/riemann_roch.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace nikulin {

namespace {

std::string gram_string(const IntMatrix& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < g.cols(); ++j) s += (j ? "," : "") + g(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

// "t-2n1" style combination of labels
std::string combination(const IntVector& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Integer a = abs(v[i]);
        if (v[i] < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (a != 1) s += a.get_str();
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

void add(TableRow& r, std::string name, bool pass, std::string message = {}) {
    r.checks.push_back({std::move(name), pass, std::move(message)});
}

// runs a check body; exceptions become a failed check
template <class F>
void guarded(TableRow& r, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        add(r, name, false, e.what());
    }
}

TableRow start(const Variant& v) {
    validate(v);
    TableRow r;
    r.variant = to_string(v.kind);
    r.d = v.d;
    return r;
}

std::string sig_string(const Signature& s) {
    return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

// (0, H', 2) over a twisted base with H' of square 2
void square_two_model(TableRow& r, const Lattice& base, const std::string& base_name, long d) {
    IntVector hp = find_square_two_vector(base);
    r.cells.push_back({"K3", base_name});
    r.cells.push_back({"v", "(0,H',2), H'=" + combination(hp, base.labels())});
    ExtendedLattice ext = extended(base, true);
    MukaiVector mv{0, 2, hp};
    add(r, "H'^2 = 2", base.norm(hp) == 2);
    add(r, "v^2 = 2", mukai_pairing(mv, mv, base) == 2);
    Lattice orth = mukai_orthogonal(ext, mv);
    add(r, "v-perp in genus of Lambda_2d", genus_equal(orth, catalog::Lambda(d)));
}

}  // namespace

bool TableRow::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool TableDocument::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.all_pass(); });
}

const std::vector<std::string>& table_names() {
    static const std::vector<std::string> n{"picx", "modelsx", "nsy", "projy"};
    return n;
}

TableRow picx_row(const Variant& v) {
    TableRow r = start(v);
    r.cells.push_back({"NS(X)", table1_ns_name(v)});
    r.cells.push_back({"T_X", table1_target_name(v)});
    r.t_y_genus_name = table1_target_name(v);
    guarded(r, "embedding", [&] {
        RealizedEmbedding e = realize(v);
        Lattice Lk = catalog::L();
        add(r, "h^2 = 2d", Lk.norm(e.h_image) == 2 * v.d);
        bool expect_primitive = v.kind != Kind::jtilde;
        add(r, expect_primitive ? "given span primitive" : "given span has index 2",
            e.primitive_as_given == expect_primitive);
        Lattice ns = e.image.induced();
        Lattice want = v.kind == Kind::jtilde ? catalog::LambdaTilde(v.d) : catalog::Lambda(v.d);
        add(r, "NS(X) in genus of the polarized lattice", genus_equal(ns, want));
        Lattice t = transcendental_of_X(v);
        Signature s = t.signature();
        add(r, "T_X rank 14, signature (2,12)", t.rank() == 14 && s == Signature{2, 12, 0}, sig_string(s));
        add(r, "T_X genus", genus_equal(t, table1_target(v)));
    });
    return r;
}

TableRow modelsx_row(const Variant& v) {
    TableRow r = start(v);
    const long d = v.d;
    guarded(r, "model", [&] {
        switch (v.kind) {
            case Kind::j1:
                if (d % 2 == 1) {
                    Lattice base = catalog::S_NS(d);
                    square_two_model(r, base, "S_d, twisted", d);
                    Lattice tt = twisted_transcendental_S(d);
                    add(r, "U(2)+W in genus T_{2d,1}", genus_equal(tt, table1_target(v)));
                    ExtendedLattice ext = extended(base, true);
                    add(r, "disc complementary to the twisted Mukai lattice",
                        fqf_isomorphic(discriminant_form(tt), discriminant_form(ext.lattice).negated()));
                    IntVector hp = find_square_two_vector(base);
                    IntMatrix g(0, base.rank());
                    g.append_row(hp);
                    Lattice p = orthogonal_complement(base, g).induced();
                    add(r, "H'-perp disc", fqf_isomorphic(discriminant_form(p), square_two_complement_form(d)),
                        describe(discriminant_form(p)));
                } else {
                    Lattice base = catalog::S_NS(d);
                    r.cells.push_back({"K3", "S_d, twisted"});
                    r.cells.push_back({"v", "(4,sum n,2)"});
                    ExtendedLattice ext = extended(base, true);
                    MukaiVector mv{4, 2, sum_n(base)};
                    add(r, "v^2 = 2", mukai_pairing(mv, mv, base) == 2);
                    add(r, "v-perp in genus of Lambda_2d", genus_equal(mukai_orthogonal(ext, mv), catalog::Lambda(d)));
                }
                break;
            case Kind::j2: {
                r.cells.push_back({"K3", "S_d"});
                r.cells.push_back({"v", "Hilbert square"});
                Lattice ns = catalog::S_NS(d);
                add(r, "S_d + <-2> in genus of Lambda_2d",
                    genus_equal(direct_sum(ns, catalog::diag(-2)), catalog::Lambda(d)));
                add(r, "disc T_{2d,2} = -disc NS(S_d)",
                    fqf_isomorphic(discriminant_form(table1_target(v)), discriminant_form(ns).negated()));
                break;
            }
            case Kind::j3: {
                Lattice base = catalog::Z_NS(d);
                square_two_model(r, base, "Z_d, twisted", d);
                Lattice tt = twisted_transcendental_Z(d);
                add(r, "U(2)+W in genus T_{2d,3}", genus_equal(tt, table1_target(v)));
                ExtendedLattice ext = extended(base, true);
                add(r, "disc complementary to the twisted Mukai lattice",
                    fqf_isomorphic(discriminant_form(tt), discriminant_form(ext.lattice).negated()));
                break;
            }
            case Kind::jtilde: {
                Lattice base = catalog::S_NS(d);
                r.cells.push_back({"K3", "S_d"});
                r.cells.push_back({"v", "(2,sum n,4)"});
                ExtendedLattice ext = extended(base, false);
                MukaiVector mv{2, 4, sum_n(base)};
                add(r, "v^2 = 2", mukai_pairing(mv, mv, base) == 2);
                Sublattice orth = mukai_orthogonal_sublattice(ext, mv);
                add(r, "v-perp in genus of LambdaTilde_2d", genus_equal(orth.induced(), catalog::LambdaTilde(d)));
                IntMatrix gens = model_embedding_gens(d);
                add(r, "explicit generators span v-perp",
                    hermite_normal_form(gens) == hermite_normal_form(orth.gens()));
                IntMatrix gram = gens * ext.lattice.gram() * gens.transpose();
                add(r, "explicit Gram is <2d> + N",
                    gram == block_diagonal(catalog::diag(2 * d).gram(), catalog::nikulin_N().gram()));
                break;
            }
        }
    });
    return r;
}

TableRow nsy_row(const Variant& v) {
    TableRow r = start(v);
    r.cells.push_back({"NS(Y)", table3_ns_name(v)});
    r.cells.push_back({"T_Y", table3_t_name(v)});
    r.t_y_genus_name = table3_t_name(v);
    guarded(r, "quotient", [&] {
        OrbifoldPicard op = orbifold_picard(quotient_input(v));
        Lattice ns = op.ns.induced(), t = op.t.induced();
        if (ns.rank() == 2) r.ns_y_gram = reduce_binary(ns.gram());
        add(r, "rank NS(Y) = 2, rank T_Y = 14", ns.rank() == 2 && t.rank() == 14);
        add(r, "ranks sum to rank H^2(Y)", ns.rank() + t.rank() == ycoord::rank);
        add(r, "NS(Y) meets T_Y trivially", rank(vstack(op.ns.gens(), op.t.gens())) == ycoord::rank);
        if (ns.rank() == 2)
            add(r, "NS(Y) Gram", binary_isometric(ns.gram(), table3_ns_gram(v)), gram_string(*r.ns_y_gram));
        add(r, "T_Y genus", genus_equal(t, table3_t_target(v)));
        for (const Partner& p : rational_partners(v))
            add(r, "T_Y rationally isometric to " + p.name, rational_equivalence(t, p.lattice));
    });
    return r;
}

TableRow projy_row(const Variant& v) {
    TableRow r = start(v);
    guarded(r, "projection", [&] {
        ProjectionReport rep = projection_report(v);
        r.pairs = std::array<long, 2>{rep.pairs.first.n, rep.pairs.second.n};
        r.dims = std::array<long, 2>{rep.dims[0].get_si(), rep.dims[1].get_si()};
        r.cells.push_back({"(N1,N2)", "(" + std::to_string(rep.pairs.first.n) + "," +
                                          std::to_string(rep.pairs.second.n) + ")"});
        r.cells.push_back({"(m1,m2)", "(" + rep.dims[0].get_str() + "," + rep.dims[1].get_str() + ")"});
        auto f = table4_formulas(v);
        add(r, "m matches the closed formulas", Rational(rep.dims[0]) == f[0] && Rational(rep.dims[1]) == f[1]);
        // two eigenspaces exhaust H^0(X, H)
        Integer total = (v.d + 2) * (v.d + 3) / 2;
        add(r, "h0 sum", rep.h0[0] + rep.h0[1] == total, Integer(rep.h0[0] + rep.h0[1]).get_str());
        auto all = admissible_pairs(v.d);
        add(r, "pair admissible", std::find(all.begin(), all.end(), rep.pairs) != all.end());
    });
    return r;
}

TableDocument build_table(const std::string& name, long d_min, long d_max, std::optional<Kind> only) {
    TableRow (*fn)(const Variant&) = nullptr;
    if (name == "picx") fn = picx_row;
    else if (name == "modelsx") fn = modelsx_row;
    else if (name == "nsy") fn = nsy_row;
    else if (name == "projy") fn = projy_row;
    else throw DomainError("unknown table: " + name);
    if (d_min <= 0 || d_max < d_min) throw DomainError("bad d range");

    TableDocument doc;
    doc.table = name;
    doc.d_min = d_min;
    doc.d_max = d_max;
    std::vector<std::future<TableRow>> jobs;
    for (const Variant& v : variants_in(d_min, d_max)) {
        if (only && v.kind != *only) continue;
        jobs.push_back(std::async(std::launch::async, fn, v));
    }
    for (auto& j : jobs) doc.rows.push_back(j.get());
    return doc;
}

std::string render_text(const TableDocument& doc) {
    // columns: variant, d, cells..., status
    std::vector<std::string> head{"variant", "d"};
    for (const TableRow& r : doc.rows)
        for (auto& [k, _] : r.cells)
            if (std::find(head.begin(), head.end(), k) == head.end()) head.push_back(k);
    head.push_back("checks");

    std::vector<std::vector<std::string>> body;
    for (const TableRow& r : doc.rows) {
        std::vector<std::string> line{r.variant, std::to_string(r.d)};
        for (std::size_t c = 2; c + 1 < head.size(); ++c) {
            std::string cell;
            for (auto& [k, val] : r.cells)
                if (k == head[c]) cell = val;
            line.push_back(cell);
        }
        std::size_t ok = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
        line.push_back(std::to_string(ok) + "/" + std::to_string(r.checks.size()) + (r.all_pass() ? " ok" : " FAIL"));
        body.push_back(line);
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        w[c] = head[c].size();
        for (auto& l : body) w[c] = std::max(w[c], l[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& l) {
        for (std::size_t c = 0; c < l.size(); ++c) {
            out << l[c];
            if (c + 1 < l.size()) out << std::string(w[c] - l[c].size() + 2, ' ');
        }
        out << '\n';
    };
    emit(head);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    emit(rule);
    for (auto& l : body) emit(l);
    for (const TableRow& r : doc.rows)
        for (const Check& c : r.checks)
            if (!c.pass)
                out << "FAILED " << r.variant << " d=" << r.d << ": " << c.name
                    << (c.message.empty() ? "" : " (" + c.message + ")") << '\n';
    return out.str();
}

}  // namespace nikulin
