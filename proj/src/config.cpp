#include "ucert/config.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ucert {

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Pretty: return "pretty";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "pretty") return OutputFormat::Pretty;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("format must be pretty, json or csv, not '" + s + "'");
}

namespace {

template <class T>
void env_int(const char* name, T& field) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    std::size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || v[used] != '\0')
        throw std::invalid_argument(std::string(name) + ": not an integer: " + v);
    field = static_cast<T>(x);
}

}  // namespace

RunConfig RunConfig::from_env() {
    RunConfig c;
    env_int("UCERT_MAX_N", c.max_n);
    env_int("UCERT_BUDGET", c.budget);
    env_int("UCERT_CLASS_CAP", c.class_cap);
    env_int("UCERT_THREADS", c.threads);
    env_int("UCERT_CACHE_CAP", c.cache_cap);
    env_int("UCERT_SAXL_MAX_D", c.saxl_max_d);
    env_int("UCERT_CONJECTURE_MAX_N", c.conjecture_max_n);
    if (const char* f = std::getenv("UCERT_FORMAT"); f && *f) c.format = parse_format(f);
    if (const char* f = std::getenv("UCERT_FORCE_KRONECKER"); f && *f)
        c.force_kronecker = std::string(f) != "0";
    c.validate();
    return c;
}

void RunConfig::validate() const {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string(what) + " must be positive");
    };
    need(max_n > 0, "max_n");
    need(budget > 0, "budget");
    need(class_cap > 0, "class_cap");
    need(cache_cap > 0, "cache_cap");
    need(saxl_max_d > 0, "saxl_max_d");
    need(conjecture_max_n > 0, "conjecture_max_n");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

std::string RunConfig::describe() const {
    std::ostringstream s;
    s << "max_n = " << max_n << "\n"
      << "budget = " << budget << "\n"
      << "class_cap = " << class_cap << "\n"
      << "threads = " << threads << "\n"
      << "format = " << to_string(format) << "\n"
      << "cache_cap = " << cache_cap << "\n"
      << "saxl_max_d = " << saxl_max_d << "\n"
      << "conjecture_max_n = " << conjecture_max_n << "\n"
      << "force_kronecker = " << (force_kronecker ? "true" : "false") << "\n";
    return s.str();
}

}  // namespace ucert
