#include "nikulin/tables.hpp"

namespace nikulin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "nikulin-table";

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        // entries stay exact: small values as numbers, large ones as strings
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).fits_slong_p()) row.push_back(m(i, j).get_si());
            else row.push_back(m(i, j).get_str());
        }
        a.push_back(row);
    }
    return a;
}

template <class J>
Integer integer_json(const J& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.template get<long long>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.template get<std::string>(), 10) != 0) throw DomainError("not an integer: " + j.dump());
        return x;
    }
    throw DomainError("expected an integer, got " + j.dump());
}

template <class J>
IntMatrix matrix_from(const J& j) {
    if (!j.is_array()) throw DomainError("matrix must be an array of rows");
    IntMatrix m(0, 0);
    for (auto& row : j) {
        if (!row.is_array()) throw DomainError("matrix row must be an array");
        IntVector v;
        for (auto& x : row) v.push_back(integer_json(x));
        if (m.rows() && v.size() != m.cols()) throw DomainError("ragged matrix");
        m.append_row(v);
    }
    return m;
}

template <class J>
std::array<long, 2> pair_from(const J& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("expected a pair");
    return {j[0].template get<long>(), j[1].template get<long>()};
}

}  // namespace

ordered_json to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return r.get_str();
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw DomainError("expected a rational, got " + j.dump());
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) throw DomainError("bad rational: " + j.dump());
    q.canonicalize();
    return q;
}

ordered_json to_json(const Lattice& l) {
    ordered_json j;
    j["rank"] = l.rank();
    j["gram"] = matrix_json(l.gram());
    j["labels"] = l.labels();
    return j;
}

IntMatrix gram_from_json(const json& j) {
    return matrix_from(j);
}

Lattice lattice_from_json(const json& j) {
    if (j.is_array()) return Lattice(gram_from_json(j), {}, Parity::Integral);
    if (!j.is_object() || !j.contains("gram")) throw DomainError("lattice JSON needs a \"gram\" field");
    IntMatrix g = gram_from_json(j["gram"]);
    if (j.contains("rank") && j["rank"].get<std::size_t>() != g.rows()) throw DomainError("rank does not match gram");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Lattice(g, labels, Parity::Integral);
}

ordered_json to_json(const TableDocument& doc) {
    ordered_json j;
    j["format"] = kFormat;
    j["version"] = TableDocument::version;
    j["table"] = doc.table;
    j["d_min"] = doc.d_min;
    j["d_max"] = doc.d_max;
    j["all_pass"] = doc.all_pass();
    ordered_json rows = ordered_json::array();
    for (const TableRow& r : doc.rows) {
        ordered_json o;
        o["variant"] = r.variant;
        o["d"] = r.d;
        ordered_json cells = ordered_json::array();
        for (auto& [k, v] : r.cells) cells.push_back({{"column", k}, {"value", v}});
        o["cells"] = cells;
        o["ns_y_gram"] = r.ns_y_gram ? matrix_json(*r.ns_y_gram) : ordered_json(nullptr);
        o["t_y_genus_name"] = r.t_y_genus_name ? ordered_json(*r.t_y_genus_name) : ordered_json(nullptr);
        o["pairs"] = r.pairs ? ordered_json(*r.pairs) : ordered_json(nullptr);
        o["dims"] = r.dims ? ordered_json(*r.dims) : ordered_json(nullptr);
        ordered_json checks = ordered_json::array();
        for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"message", c.message}});
        o["checks"] = checks;
        rows.push_back(o);
    }
    j["rows"] = rows;
    return j;
}

TableDocument table_from_json(const ordered_json& j) {
    try {
        if (j.at("format") != kFormat) throw DomainError("not a table document");
        if (j.at("version").get<int>() != TableDocument::version) throw DomainError("unsupported table version");
        TableDocument doc;
        doc.table = j.at("table").get<std::string>();
        doc.d_min = j.at("d_min").get<long>();
        doc.d_max = j.at("d_max").get<long>();
        for (auto& o : j.at("rows")) {
            TableRow r;
            r.variant = o.at("variant").get<std::string>();
            r.d = o.at("d").get<long>();
            for (auto& c : o.at("cells")) r.cells.push_back({c.at("column"), c.at("value")});
            if (!o.at("ns_y_gram").is_null()) r.ns_y_gram = matrix_from(o["ns_y_gram"]);
            if (!o.at("t_y_genus_name").is_null()) r.t_y_genus_name = o["t_y_genus_name"].get<std::string>();
            if (!o.at("pairs").is_null()) r.pairs = pair_from(o["pairs"]);
            if (!o.at("dims").is_null()) r.dims = pair_from(o["dims"]);
            for (auto& c : o.at("checks"))
                r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                    c.at("message").get<std::string>()});
            doc.rows.push_back(std::move(r));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed table JSON: ") + e.what());
    }
}

}  // namespace nikulin
