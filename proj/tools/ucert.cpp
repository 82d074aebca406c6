// ucert: command-line front end for the certificate engine.
//
// exit status: 0 ok, 1 verification mismatch or failure, 2 usage error
// (including bad partitions and requests above the configured caps).

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ucert/certificates.hpp"
#include "ucert/config.hpp"
#include "ucert/golden.hpp"
#include "ucert/kronecker.hpp"
#include "ucert/quiver.hpp"
#include "ucert/saxl.hpp"
#include "ucert/symfunc.hpp"
#include "ucert/tables.hpp"

using nlohmann::ordered_json;
using namespace ucert;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json parts_json(const Partition& p) { return p.parts(); }

ordered_json triple_json(const PartitionTriple& t) {
    return ordered_json::array({parts_json(t[0]), parts_json(t[1]), parts_json(t[2])});
}

ordered_json schur_json(const SchurPoly& f) {
    ordered_json j;
    j["basis"] = "schur";
    j["degree"] = f.degree();
    j["terms"] = ordered_json::array();
    for (const auto& [lambda, c] : f.terms())
        j["terms"].push_back({{"partition", parts_json(lambda)}, {"coeff", c}});
    return j;
}

SchurPoly schur_from_json(const ordered_json& j) {
    if (j.value("basis", "") != "schur") throw UsageError("expected a Schur-basis JSON object");
    SchurPoly f(j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        f.add(Partition(t.at("partition").get<std::vector<int>>()), t.at("coeff").get<std::int64_t>());
    return f;
}

// A polynomial argument: a partition (s_lambda), inline JSON, or @file.json.
SchurPoly poly_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw UsageError("cannot read " + text.substr(1));
        return schur_from_json(ordered_json::parse(in));
    }
    if (!text.empty() && text[0] == '{') return schur_from_json(ordered_json::parse(text));
    return SchurPoly::schur(parse_partition(text));
}

// "d:lambda" or "d:lambda*m", e.g. 2:1^2*3
Type type_arg(const std::vector<std::string>& entries) {
    Type t;
    for (const auto& e : entries) {
        const auto colon = e.find(':');
        if (colon == std::string::npos) throw UsageError("type entry '" + e + "' needs d:lambda");
        const auto star = e.find('*', colon);
        const int d = std::stoi(e.substr(0, colon));
        const auto lambda = parse_partition(e.substr(colon + 1, star == std::string::npos
                                                                   ? std::string::npos
                                                                   : star - colon - 1));
        const int mult = star == std::string::npos ? 1 : std::stoi(e.substr(star + 1));
        if (d < 1 || mult < 1) throw UsageError("type entry '" + e + "': d and mult must be positive");
        t.add(d, lambda, mult);
    }
    return t;
}

PartitionTriple triple_arg(const std::vector<std::string>& v) {
    if (v.size() != 3) throw UsageError("expected three partitions");
    return {parse_partition(v[0]), parse_partition(v[1]), parse_partition(v[2])};
}

ordered_json root_json(const RootClass& rc) {
    ordered_json j;
    j["tag"] = to_string(rc.tag);
    j["trail_length"] = rc.trail.size();
    j["terminal"] = rc.terminal.str();
    if (rc.tag == RootTag::Real)
        if (auto eq = dynkin_equivalent(rc)) j["equivalent"] = triple_json(*eq);
    return j;
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json j;
    j["mu"] = triple_json(c.mu);
    j["sequence"] = ordered_json::array();
    for (const auto& b : c.seq.blocks())
        j["sequence"].push_back({{"omega", triple_json(b.omega)}, {"mult", b.mult}});
    j["blocks"] = ordered_json::array();
    for (const auto& b : c.blocks) {
        auto r = root_json(b.root);
        r["omega"] = triple_json(b.omega);
        ordered_json trail = ordered_json::array();
        for (const auto& v : b.root.trail) trail.push_back(v.str());
        r["trail"] = trail;
        j["blocks"].push_back(r);
    }
    j["M"] = c.m.value;
    j["rule"] = c.rule;
    j["verified"] = verify_certificate(c);
    return j;
}

int emit_check(const TableCheck& t, std::ostream& out) {
    out << t.csv();
    std::cerr << t.name << " v" << t.version << ": " << t.cells.size() << " cells, " << t.diffs()
              << " diffs\n";
    return t.diffs() == 0 ? 0 : 1;
}

ordered_json verdict_json(const SaxlVerdict& v) {
    ordered_json j;
    j["d"] = v.d;
    j["tau"] = parts_json(v.tau);
    j["case"] = to_string(v.tag);
    j["ok"] = v.ok;
    if (!v.ok) j["failure"] = v.failure;
    const auto& e = v.evidence;
    if (e.g) j["g"] = e.g->str();
    if (e.dominance) j["dominance"] = to_string(*e.dominance);
    if (e.external) j["premise_only"] = true;
    if (e.equivalent) j["equivalent"] = triple_json(*e.equivalent);
    if (e.root) j["root"] = root_json(*e.root);
    if (e.trajectory) {
        ordered_json deltas = ordered_json::array();
        for (const auto& s : e.trajectory->steps) deltas.push_back(s.delta);
        j["delta_trajectory"] = deltas;
    }
    return j;
}

std::string verdict_detail(const SaxlVerdict& v) {
    const auto& e = v.evidence;
    if (!v.ok) return v.failure;
    if (e.g) return "g=" + e.g->str();
    if (e.external) return std::string("premise ") + to_string(*e.dominance);
    if (e.equivalent) return "equivalent " + e.equivalent->str();
    if (e.trajectory) return "delta " + std::to_string(e.trajectory->last().delta) + " after " +
                             std::to_string(e.trajectory->iterations()) + " steps";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg = RunConfig::from_env();
    } catch (const std::exception& e) {
        std::cerr << "ucert: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Exact non-vanishing certificates for tensor squares of unipotent characters"};
    app.require_subcommand(0, 1);
    std::string format = to_string(cfg.format);
    bool print_config = false;
    app.add_option("--max-n", cfg.max_n, "largest n for a Kronecker sum")->capture_default_str();
    app.add_option("--class-cap", cfg.class_cap, "largest number of W classes in one M")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)")
        ->capture_default_str();
    app.add_option("--cache-cap", cfg.cache_cap, "character cache entries before a flush")
        ->capture_default_str();
    app.add_option("--format", format, "pretty | json | csv")->capture_default_str();
    app.add_flag("--print-config", print_config, "print the effective configuration and exit");

    std::ostream& out = std::cout;
    int status = 0;
    std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;

    // char
    auto* c_char = app.add_subcommand("char", "p_mu in the Schur basis (a character table column), "
                                              "or the single value chi^lambda_mu");
    std::string char_mu, char_lambda;
    c_char->add_option("mu", char_mu, "cycle type")->required();
    c_char->add_option("lambda", char_lambda, "irreducible (optional)");
    handlers.emplace_back(c_char, [&] {
        const auto mu = parse_partition(char_mu);
        if (!char_lambda.empty()) {
            out << character_value(parse_partition(char_lambda), mu) << "\n";
            return;
        }
        out << schur_json(power_to_schur(PowerPoly::power(mu))).dump() << "\n";
    });

    // lr
    auto* c_lr = app.add_subcommand("lr", "s_lambda * s_mu by Littlewood-Richardson");
    std::string lr_a, lr_b;
    c_lr->add_option("lambda", lr_a)->required();
    c_lr->add_option("mu", lr_b)->required();
    handlers.emplace_back(c_lr, [&] {
        out << schur_json(lr_product(parse_partition(lr_a), parse_partition(lr_b))).dump() << "\n";
    });

    // pair
    auto* c_pair = app.add_subcommand(
        "pair", "Hall inner product <f, g>; each argument is a partition, inline JSON or @file");
    std::string pair_f, pair_g;
    c_pair->add_option("f", pair_f)->required();
    c_pair->add_option("g", pair_g)->required();
    handlers.emplace_back(c_pair, [&] {
        const auto f = poly_arg(pair_f), g = poly_arg(pair_g);
        ordered_json j;
        j["f"] = schur_json(f);
        j["g"] = schur_json(g);
        j["pairing"] = hall_pairing(f, g).str();
        out << j.dump() << "\n";
    });

    // evaltype
    auto* c_eval = app.add_subcommand("evaltype", "s_omega for a type given as d:lambda[*mult] ...");
    std::vector<std::string> eval_entries;
    c_eval->add_option("entries", eval_entries, "e.g. 2:1,1 1:1*2")->required();
    handlers.emplace_back(c_eval, [&] { out << schur_json(eval_type(type_arg(eval_entries))).dump() << "\n"; });

    // kron
    auto* c_kron = app.add_subcommand("kron", "Kronecker coefficient g_(mu1,mu2,mu3)");
    std::vector<std::string> kron_args;
    int kron_table = 0;
    c_kron->add_option("partitions", kron_args, "mu1 mu2 mu3");
    c_kron->add_option("--table", kron_table, "g column of the staircase table for this d");
    handlers.emplace_back(c_kron, [&] {
        if (kron_table > 0) {
            auto t = check_staircase();
            std::erase_if(t.cells, [&](const TableCell& c) {
                return c.key[0] != std::to_string(kron_table) ||
                       c.expected.find("; g ") == std::string::npos;
            });
            status = emit_check(t, out);
            return;
        }
        const auto mu = triple_arg(kron_args);
        out << kronecker(mu, {cfg.max_n, cfg.threads}) << "\n";
    });

    // root
    auto* c_root = app.add_subcommand("root", "classify v_mu on the star graph");
    std::vector<std::string> root_args;
    int root_table = 0;
    c_root->add_option("partitions", root_args, "mu1 mu2 mu3");
    c_root->add_option("--table", root_table, "root column for (xi_d, xi_d, tau), tau_1 <= n-d");
    handlers.emplace_back(c_root, [&] {
        if (root_table > 0) {
            if (root_table > 6) throw UsageError("root --table covers d <= 6");
            const auto xi = staircase(root_table);
            const int n = xi.size();
            out << golden::csv_row({"d", "tau", "root", "equivalent"}) << "\n";
            for (const auto& tau : partitions_of(n)) {
                if (tau[0] > n - root_table) continue;
                const auto rc = classify(dimvector_of({xi, xi, tau}));
                const auto eq = rc.tag == RootTag::Real ? dynkin_equivalent(rc) : std::nullopt;
                out << golden::csv_row({std::to_string(root_table), tau.str(), to_string(rc.tag),
                                        eq ? eq->str() : ""})
                    << "\n";
            }
            return;
        }
        const auto mu = triple_arg(root_args);
        const auto v = dimvector_of(mu);
        auto j = root_json(classify(v));
        j["delta"] = delta(v);
        out << j.dump() << "\n";
    });

    // cert
    auto* c_cert = app.add_subcommand("cert", "search for a certificate that U_mu(q) != 0");
    std::vector<std::string> cert_args;
    bool ex1 = false, ex2 = false;
    c_cert->add_option("partitions", cert_args, "mu1 mu2 mu3");
    c_cert->add_option("--budget", cfg.budget, "sequences examined by the open search")
        ->capture_default_str();
    c_cert->add_flag("--example1", ex1, "n=4, mu=(2,2) table against the embedded copy");
    c_cert->add_flag("--example2", ex2, "n=9, mu=(5,4) table against the embedded copy");
    handlers.emplace_back(c_cert, [&] {
        if (ex1 || ex2) {
            if (ex1) status |= emit_check(check_example1(), out);
            if (ex2) status |= emit_check(check_example2_m(), out);
            return;
        }
        const auto mu = triple_arg(cert_args);
        CertificateSearch s{cfg.budget, cfg.class_cap, cfg.max_n, cfg.threads};
        if (auto c = find_certificate(mu, s))
            out << certificate_json(*c).dump() << "\n";
        else
            out << "none found within budget\n";
    });

    // saxl
    auto* c_saxl = app.add_subcommand("saxl", "verify U_(xi_d,xi_d,tau) != 0 for every tau");
    int saxl_d = 0;
    bool saxl_json = false, saxl_csv = false;
    c_saxl->add_option("--d", saxl_d, "staircase size")->required();
    c_saxl->add_flag("--json", saxl_json);
    c_saxl->add_flag("--csv", saxl_csv);
    c_saxl->add_option("--max-d", cfg.saxl_max_d)->capture_default_str();
    c_saxl->add_flag("--force-kronecker", cfg.force_kronecker,
                     "compute g in the tau_1 > n-d case at every d");
    handlers.emplace_back(c_saxl, [&] {
        SaxlOptions o;
        o.max_d = cfg.saxl_max_d;
        o.force_kronecker = cfg.force_kronecker;
        o.threads = cfg.threads;
        const auto r = verify_saxl_all(saxl_d, o);
        if (saxl_json || cfg.format == OutputFormat::Json) {
            ordered_json j;
            j["d"] = r.d;
            j["all_pass"] = r.all_pass();
            j["counts"] = ordered_json::object();
            for (const auto& [tag, c] : r.counts) j["counts"][to_string(tag)] = c;
            j["verdicts"] = ordered_json::array();
            for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_json(v));
            out << j.dump() << "\n";
        } else if (saxl_csv || cfg.format == OutputFormat::Csv) {
            out << golden::csv_row({"d", "tau", "case", "ok", "detail"}) << "\n";
            for (const auto& v : r.verdicts)
                out << golden::csv_row({std::to_string(v.d), v.tau.str(), to_string(v.tag),
                                        v.ok ? "1" : "0", verdict_detail(v)})
                    << "\n";
        } else {
            out << "d=" << r.d << " n=" << staircase(r.d).size() << " partitions=" << r.verdicts.size()
                << " failures=" << r.failures << "\n";
            for (const auto& [tag, c] : r.counts) out << "  " << to_string(tag) << ": " << c << "\n";
            for (const auto& v : r.verdicts)
                if (!v.ok || (v.tag != SaxlTag::FundamentalImaginary &&
                              v.tag != SaxlTag::ImaginaryViaReduction))
                    out << "  (" << v.tau.str() << ") " << to_string(v.tag) << " "
                        << verdict_detail(v) << (v.ok ? "" : "  FAILED") << "\n";
        }
        if (!r.all_pass()) status = 1;
    });

    // conjecture
    auto* c_conj = app.add_subcommand("conjecture", "certify U_(mu,mu,tau) != 0 for mu_1 <= ceil(n/2)");
    int conj_n = 0;
    c_conj->add_option("--n", conj_n)->required();
    c_conj->add_option("--max-n", cfg.conjecture_max_n)->capture_default_str();
    c_conj->add_option("--budget", cfg.budget)->capture_default_str();
    handlers.emplace_back(c_conj, [&] {
        ConjectureOptions o;
        o.max_n = cfg.conjecture_max_n;
        o.search = {cfg.budget, cfg.class_cap, cfg.max_n, cfg.threads};
        const auto r = conjecture_scan(conj_n, o);
        ordered_json j;
        j["n"] = r.n;
        j["certified"] = r.certified;
        j["inconclusive"] = r.inconclusive;
        j["pairs"] = ordered_json::array();
        for (const auto& e : r.entries) {
            ordered_json p{{"mu", parts_json(e.mu)}, {"tau", parts_json(e.tau)}};
            if (e.cert) {
                p["rule"] = e.cert->rule;
                p["sequence"] = e.cert->seq.str();
                p["M"] = e.cert->m.value;
            } else {
                p["rule"] = nullptr;
            }
            j["pairs"].push_back(p);
        }
        j["mu1_above_half"] = ordered_json::array();
        for (const auto& c : r.outside)
            j["mu1_above_half"].push_back(
                {{"mu", parts_json(c.mu)}, {"g_column", c.g.str()}, {"root", to_string(c.root)}});
        out << j.dump() << "\n";
    });

    // tables
    auto* c_tables = app.add_subcommand("tables", "recompute the embedded tables and diff them");
    std::string which = "all";
    c_tables->add_option("--which", which, "all | " + [] {
        std::string s;
        for (const auto& n : golden::table_names()) s += (s.empty() ? "" : " | ") + n;
        return s;
    }())->capture_default_str();
    handlers.emplace_back(c_tables, [&] {
        std::vector<std::string> names;
        if (which == "all")
            names = golden::table_names();
        else
            names = {which};
        int total = 0;
        for (const auto& n : names) {
            TableCheck t;
            try {
                t = check_table(n);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            out << "# " << t.name << " version " << t.version << "\n";
            status |= emit_check(t, out);
            total += t.diffs();
        }
        out << "# diff summary: " << total << " cells differ\n";
    });

    try {
        app.parse(argc, argv);
        cfg.format = parse_format(format);
        cfg.validate();
        set_character_cache_cap(static_cast<std::size_t>(cfg.cache_cap));
        if (print_config) {
            out << cfg.describe();
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }
        for (auto& [sub, run] : handlers)
            if (sub->parsed()) run();
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        std::cout << "\nEffective configuration (defaults with UCERT_* overrides):\n"
                  << cfg.describe();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "ucert: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ucert: " << e.what() << "\n";
        return 2;
    } catch (const FeasibilityError& e) {
        std::cerr << "ucert: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ucert: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ucert: " << e.what() << "\n";
        return 1;
    }
    return status;
}
