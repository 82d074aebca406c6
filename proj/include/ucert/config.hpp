#pragma once

#include <cstdint>
#include <string>

namespace ucert {

enum class OutputFormat { Pretty, Json, Csv };
const char* to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

/// Knobs shared by the CLI subcommands. Every field can be overridden by an
/// environment variable UCERT_<FIELD> (e.g. UCERT_MAX_N=24); flags win over both.
struct RunConfig {
    /// Largest n for a Kronecker sum.
    int max_n = 20;
    /// Sequences examined by the open-ended certificate search.
    std::int64_t budget = 5000;
    /// Largest number of W classes summed in one multiplicity.
    std::int64_t class_cap = 100000;
    /// Worker threads; 0 means the OpenMP default.
    int threads = 0;
    OutputFormat format = OutputFormat::Pretty;
    /// Character cache entries kept before a flush.
    std::int64_t cache_cap = 2000000;
    int saxl_max_d = 7;
    int conjecture_max_n = 8;
    /// Compute g directly in the tau_1 > n-d case for d >= 6 too.
    bool force_kronecker = false;

    /// Defaults, then UCERT_* overrides. Throws std::invalid_argument on a
    /// malformed or non-positive value.
    static RunConfig from_env();
    /// Throws std::invalid_argument unless every cap is positive.
    void validate() const;
    /// One "name = value" line per field.
    std::string describe() const;
};

}  // namespace ucert
