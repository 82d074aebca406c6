#include "ucert/golden.hpp"

#include <stdexcept>
#include <utility>

namespace ucert::golden {

// generated from data/golden/*.csv at configure time
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_csv();

namespace {

std::vector<std::vector<std::string>> split_records(std::string_view text, Table& meta) {
    std::vector<std::vector<std::string>> rows;
    std::size_t i = 0;
    bool at_line_start = true;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;

    auto end_row = [&] {
        if (any || !field.empty() || !row.empty()) {
            row.push_back(std::move(field));
            rows.push_back(std::move(row));
        }
        row.clear();
        field.clear();
        any = false;
        at_line_start = true;
    };

    while (i < text.size()) {
        const char c = text[i];
        if (at_line_start && !quoted && c == '#' && rows.empty()) {
            const auto nl = text.find('\n', i);
            auto line = text.substr(i + 1, nl == std::string_view::npos ? text.npos : nl - i - 1);
            while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
            if (line.rfind("version ", 0) == 0)
                meta.version = std::stoi(std::string(line.substr(8)));
            else if (meta.title.empty())
                meta.title = std::string(line);
            i = nl == std::string_view::npos ? text.size() : nl + 1;
            continue;
        }
        at_line_start = false;
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n') {
            end_row();
        } else if (c != '\r') {
            field += c;
            any = true;
        }
        ++i;
    }
    if (quoted) throw std::runtime_error("csv: unterminated quote in " + meta.name);
    end_row();
    return rows;
}

}  // namespace

Table parse_csv(std::string name, std::string_view text) {
    Table t;
    t.name = std::move(name);
    auto rows = split_records(text, t);
    if (rows.empty()) throw std::runtime_error("csv: no header in " + t.name);
    t.header = rows.front();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != t.header.size())
            throw std::runtime_error("csv: row " + std::to_string(r) + " of " + t.name +
                                     " has the wrong number of fields");
        Record rec;
        for (std::size_t c = 0; c < t.header.size(); ++c) rec[t.header[c]] = rows[r][c];
        t.records.push_back(std::move(rec));
    }
    return t;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out;
}

const Table& table(std::string_view name) {
    static const std::map<std::string, Table, std::less<>> tables = [] {
        std::map<std::string, Table, std::less<>> m;
        for (const auto& [file, text] : embedded_csv()) {
            std::string stem(file.substr(0, file.rfind('.')));
            m.emplace(stem, parse_csv(stem, text));
        }
        return m;
    }();
    const auto it = tables.find(name);
    if (it == tables.end()) throw std::out_of_range("no embedded table named " + std::string(name));
    return it->second;
}

std::vector<std::string> table_names() {
    std::vector<std::string> out;
    for (const auto& [file, text] : embedded_csv()) out.emplace_back(file.substr(0, file.rfind('.')));
    return out;
}

}  // namespace ucert::golden
