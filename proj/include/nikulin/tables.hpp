#pragma once

#include "nikulin/embeddings.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nikulin {

struct Check {
    std::string name;
    bool pass = false;
    std::string message;
    bool operator==(const Check&) const = default;
};

struct TableRow {
    std::string variant;
    long d = 0;
    std::vector<std::pair<std::string, std::string>> cells;  // display columns, in order
    std::optional<IntMatrix> ns_y_gram;
    std::optional<std::string> t_y_genus_name;
    std::optional<std::array<long, 2>> pairs;  // (N1, N2)
    std::optional<std::array<long, 2>> dims;   // (m1, m2)
    std::vector<Check> checks;

    bool all_pass() const;
    bool operator==(const TableRow&) const = default;
};

struct TableDocument {
    static constexpr int version = 1;
    std::string table;
    long d_min = 1, d_max = 1;
    std::vector<TableRow> rows;

    bool all_pass() const;
    bool operator==(const TableDocument&) const = default;
};

const std::vector<std::string>& table_names();
TableDocument build_table(const std::string& name, long d_min, long d_max, std::optional<Kind> only = {});

TableRow picx_row(const Variant& v);
TableRow modelsx_row(const Variant& v);
TableRow nsy_row(const Variant& v);
TableRow projy_row(const Variant& v);

std::string render_text(const TableDocument& doc);

nlohmann::ordered_json to_json(const TableDocument& doc);
TableDocument table_from_json(const nlohmann::ordered_json& j);

// {"rank", "gram", "labels"}
nlohmann::ordered_json to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);
IntMatrix gram_from_json(const nlohmann::json& j);
// rationals as "p/q" strings or integers
Rational rational_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Rational& r);

}  // namespace nikulin
