#pragma once

#include <map>
#include <string>
#include <vector>

#include "ucert/certificates.hpp"
#include "ucert/golden.hpp"

namespace ucert {

/// One golden cell next to its recomputed value.
struct TableCell {
    std::vector<std::string> key;
    std::string expected;
    std::string computed;
    std::string origin;
    bool match = false;
};

struct TableCheck {
    std::string name;
    int version = 0;
    std::vector<std::string> key_header;
    std::vector<TableCell> cells;

    int diffs() const;
    /// key..., expected, computed, origin, status
    std::string csv() const;
};

TableCheck check_example1();
TableCheck check_example2_m();
TableCheck check_example2_decomposition();
TableCheck check_staircase();

/// Dispatch by embedded table name.
TableCheck check_table(const std::string& name);

/// "2[2,1]x[3]+[1^3]x[1^3]" <-> irrep multiplicities. Factors of blocks with
/// mult 1 are left out of the text; '.' is the zero module.
std::map<WeylIrrep, std::int64_t> parse_decomposition(const std::string& text,
                                                      const TypeSeqPlain& seq);
std::string format_decomposition(const std::map<WeylIrrep, std::int64_t>& d,
                                 const TypeSeqPlain& seq);
/// Sum of mult * dim over the terms.
std::int64_t decomposition_dimension(const std::map<WeylIrrep, std::int64_t>& d);

/// The three plain sequences of the n = 9 decomposition table, by str().
TypeSeqPlain example2_plain(const std::string& label);

}  // namespace ucert
