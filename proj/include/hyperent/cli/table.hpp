#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hyperent::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

//! Header row first; doubles with 15 significant digits; RFC 4180 quoting.
void write_csv(const Table& table, std::ostream& out);
//! Array of row objects keyed by column name, in column order.
void write_json(const Table& table, std::ostream& out);

std::string format_double(double value);

}  // namespace hyperent::cli
