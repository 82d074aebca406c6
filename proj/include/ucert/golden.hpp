#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ucert::golden {

/// One CSV record, fields keyed by the header.
using Record = std::map<std::string, std::string>;

struct Table {
    /// File name without extension, e.g. "example1".
    std::string name;
    int version = 0;
    std::string title;
    std::vector<std::string> header;
    std::vector<Record> records;
};

/// RFC 4180 style: comma separated, double quotes around fields that need
/// them, "" inside quotes. Lines starting with '#' before the header carry
/// the title and "version N".
Table parse_csv(std::string name, std::string_view text);

/// Quote a field if it contains a comma, quote or newline.
std::string csv_field(std::string_view s);
std::string csv_row(const std::vector<std::string>& fields);

/// Embedded tables: example1, example2_m, example2_decomposition, staircase.
const Table& table(std::string_view name);
std::vector<std::string> table_names();

}  // namespace ucert::golden
