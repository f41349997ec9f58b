#include "hyperent/cli/table.hpp"

#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperent::cli {

namespace {

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    return std::get<std::string>(cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(15) << value;
    return s.str();
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << quote_csv(table.columns[c]);
    }
    out << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << quote_csv(cell_text(row[c]));
        }
        out << "\r\n";
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::visit([&](const auto& v) { obj[table.columns[c]] = v; }, row[c]);
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << "\n";
}

}  // namespace hyperent::cli
