#include "ucert/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "ucert/kronecker.hpp"
#include "ucert/quiver.hpp"

namespace ucert {

int TableCheck::diffs() const {
    int n = 0;
    for (const auto& c : cells) n += c.match ? 0 : 1;
    return n;
}

std::string TableCheck::csv() const {
    std::ostringstream out;
    auto header = key_header;
    for (const char* h : {"expected", "computed", "origin", "status"}) header.emplace_back(h);
    out << golden::csv_row(header) << "\n";
    for (const auto& c : cells) {
        auto row = c.key;
        row.insert(row.end(), {c.expected, c.computed, c.origin, c.match ? "ok" : "DIFF"});
        out << golden::csv_row(row) << "\n";
    }
    return out.str();
}

namespace {

TableCheck start(const std::string& name, std::vector<std::string> keys) {
    TableCheck t;
    t.name = name;
    t.version = golden::table(name).version;
    t.key_header = std::move(keys);
    return t;
}

void push(TableCheck& t, std::vector<std::string> key, std::string expected, std::string computed,
          const std::string& origin) {
    const bool match = expected == computed;
    t.cells.push_back({std::move(key), std::move(expected), std::move(computed), origin, match});
}

std::string triple_compact(const PartitionTriple& t) {
    return "(" + compact_str(t[0]) + ")(" + compact_str(t[1]) + ")(" + compact_str(t[2]) + ")";
}

// "equiv (1^3)(1^3)(2,1)" -> normalized text
std::string normalize_equiv(const std::string& text) {
    const auto body = text.substr(text.find('(') + 1);
    std::vector<Partition> ps;
    std::size_t pos = 0;
    while (pos < body.size()) {
        const auto close = body.find(')', pos);
        ps.push_back(parse_partition(body.substr(pos, close - pos)));
        pos = body.find('(', close);
        if (pos == std::string::npos) break;
        ++pos;
    }
    if (ps.size() != 3) throw std::runtime_error("bad triple in '" + text + "'");
    return "equiv " + triple_compact({ps[0], ps[1], ps[2]});
}

}  // namespace

TableCheck check_example1() {
    auto t = start("example1", {"row", "tau"});
    const auto ex = example1_sum();
    std::map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < ex.rows.size(); ++r) row_of[ex.rows[r].str()] = r;
    for (const auto& rec : golden::table("example1").records) {
        const auto tau = parse_partition(rec.at("tau"));
        std::size_t col = 0;
        while (col < ex.taus.size() && !(ex.taus[col] == tau)) ++col;
        std::string computed = "?";
        if (col < ex.taus.size()) {
            if (rec.at("row") == "U")
                computed = std::to_string(ex.sums[col]);
            else if (auto it = row_of.find(rec.at("row")); it != row_of.end())
                computed = std::to_string(ex.values[it->second][col]);
        }
        push(t, {rec.at("row"), rec.at("tau")}, rec.at("value"), computed, rec.at("origin"));
    }
    return t;
}

TableCheck check_example2_m() {
    auto t = start("example2_m", {"tau", "sequence"});
    const Partition mu{5, 4};
    std::map<std::string, TripleTypeSeq> seqs;
    for (const auto& s : example2_sequences()) seqs.emplace(s.str(), s);
    for (const auto& rec : golden::table("example2_m").records) {
        const auto tau = parse_partition(rec.at("tau"));
        std::string computed = "?";
        if (auto it = seqs.find(rec.at("sequence")); it != seqs.end())
            computed = std::to_string(multiplicity(it->second, {mu, mu, tau}).value);
        push(t, {rec.at("tau"), rec.at("sequence")}, rec.at("value"), computed, rec.at("origin"));
    }
    return t;
}

TypeSeqPlain example2_plain(const std::string& label) {
    for (int k : {1, 3, 4}) {
        TypeSeqPlain s;
        s.add(column(2), k);
        s.add(column(1), 9 - 2 * k);
        if (s.str() == label) return s;
    }
    throw std::invalid_argument("unknown sequence label " + label);
}

std::map<WeylIrrep, std::int64_t> parse_decomposition(const std::string& text,
                                                      const TypeSeqPlain& seq) {
    std::map<WeylIrrep, std::int64_t> out;
    if (text == ".") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        const auto term = text.substr(pos, end - pos);
        const auto open = term.find('[');
        const std::int64_t mult = open == 0 ? 1 : std::stoll(term.substr(0, open));
        std::vector<Partition> factors;
        for (auto p = open; p != std::string::npos; p = term.find('[', p + 1)) {
            const auto close = term.find(']', p);
            factors.push_back(parse_partition(term.substr(p + 1, close - p - 1)));
        }
        WeylIrrep irrep;
        std::size_t f = 0;
        for (const auto& b : seq.blocks()) {
            if (b.mult == 1) {
                irrep.push_back(Partition{1});
            } else {
                if (f >= factors.size()) throw std::invalid_argument("too few factors in '" + term + "'");
                irrep.push_back(factors[f++]);
            }
        }
        if (f != factors.size()) throw std::invalid_argument("too many factors in '" + term + "'");
        out[irrep] += mult;
        pos = end + 1;
    }
    return out;
}

std::string format_decomposition(const std::map<WeylIrrep, std::int64_t>& d,
                                 const TypeSeqPlain& seq) {
    if (d.empty()) return ".";
    std::string s;
    for (auto it = d.begin(); it != d.end(); ++it) {
        if (!s.empty()) s += "+";
        if (it->second != 1) s += std::to_string(it->second);
        std::string factors;
        for (std::size_t j = 0; j < it->first.size(); ++j) {
            if (seq.blocks()[j].mult == 1) continue;
            if (!factors.empty()) factors += "x";
            factors += "[" + compact_str(it->first[j]) + "]";
        }
        s += factors;
    }
    return s;
}

std::int64_t decomposition_dimension(const std::map<WeylIrrep, std::int64_t>& d) {
    std::int64_t total = 0;
    for (const auto& [irrep, mult] : d) {
        std::int64_t dim = mult;
        for (const auto& p : irrep) dim = checked_mul(dim, character_value(p, column(p.size())));
        total = checked_add(total, dim);
    }
    return total;
}

TableCheck check_example2_decomposition() {
    auto t = start("example2_decomposition", {"tau", "sequence", "quantity"});
    for (const auto& rec : golden::table("example2_decomposition").records) {
        const auto tau = parse_partition(rec.at("tau"));
        const auto seq = example2_plain(rec.at("sequence"));
        const auto expected = parse_decomposition(rec.at("decomposition"), seq);
        const auto computed = decompose_hom(seq, tau);
        const std::vector<std::string> key{rec.at("tau"), rec.at("sequence")};
        auto k1 = key, k2 = key;
        k1.emplace_back("decomposition");
        k2.emplace_back("dimension");
        // compare structurally, print both in the same normal form
        push(t, k1, format_decomposition(expected, seq), format_decomposition(computed, seq),
             rec.at("origin"));
        push(t, k2, std::to_string(decomposition_dimension(expected)),
             std::to_string(c_gen(seq, tau)), rec.at("origin"));
    }
    return t;
}

TableCheck check_staircase() {
    auto t = start("staircase", {"d", "tau"});
    for (const auto& rec : golden::table("staircase").records) {
        const int d = std::stoi(rec.at("d"));
        const auto xi = staircase(d);
        const int n = xi.size();
        const auto& tau_text = rec.at("tau");
        const auto& evidence = rec.at("evidence");

        if (tau_text.rfind("tau1<=", 0) == 0) {
            // a family: every tau with tau_1 <= bound except the listed ones
            const int bound = std::stoi(tau_text.substr(6));
            std::vector<Partition> except;
            if (evidence.rfind("except ", 0) == 0) {
                std::string rest = evidence.substr(7);
                std::size_t pos = 0;
                while (pos <= rest.size()) {
                    auto bar = rest.find('|', pos);
                    if (bar == std::string::npos) bar = rest.size();
                    except.push_back(parse_partition(rest.substr(pos, bar - pos)));
                    pos = bar + 1;
                }
            }
            int members = 0;
            std::string odd;
            for (const auto& tau : partitions_of(n)) {
                if (tau[0] > bound) continue;
                bool skip = false;
                for (const auto& e : except) skip = skip || e == tau;
                if (skip) continue;
                ++members;
                const auto tag = classify(dimvector_of({xi, xi, tau})).tag;
                if (tag != RootTag::Imaginary)
                    odd += " " + compact_str(tau) + ":" + to_string(tag);
            }
            const std::string expected = rec.at("root") + " x" + std::to_string(members);
            push(t, {rec.at("d"), tau_text + " " + evidence}, expected,
                 odd.empty() ? expected : "mixed" + odd, rec.at("origin"));
            continue;
        }

        const auto tau = parse_partition(tau_text);
        const PartitionTriple triple{xi, xi, tau};
        const auto rc = classify(dimvector_of(triple));
        std::string expected = rec.at("root");
        std::string computed = to_string(rc.tag);
        if (evidence.rfind("g ", 0) == 0) {
            expected += "; " + evidence;
            computed += "; g " + kronecker(triple, {std::max(20, n), 0}).str();
        } else if (evidence.rfind("equiv", 0) == 0) {
            expected += "; " + normalize_equiv(evidence);
            const auto eq = dynkin_equivalent(rc);
            computed += "; " + (eq ? "equiv " + triple_compact(*eq) : std::string("no equivalent"));
        }
        push(t, {rec.at("d"), tau_text}, expected, computed, rec.at("origin"));
    }
    return t;
}

TableCheck check_table(const std::string& name) {
    if (name == "example1") return check_example1();
    if (name == "example2_m") return check_example2_m();
    if (name == "example2_decomposition") return check_example2_decomposition();
    if (name == "staircase") return check_staircase();
    throw std::invalid_argument("unknown table " + name);
}

}  // namespace ucert
