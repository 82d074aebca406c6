// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "ucert/certificates.hpp"
#include "ucert/kronecker.hpp"
#include "ucert/quiver.hpp"
#include "ucert/saxl.hpp"
#include "ucert/symfunc.hpp"
#include "ucert/tables.hpp"

using namespace ucert;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

int failures = 0;

void run(const char* id, const char* what, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", id, what, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

Outcome ac1() {
    Outcome o;
    struct Row { int d; Partition tau; int g; };
    const Row rows[] = {{2, {1, 1, 1}, 1},    {3, {2, 2, 2}, 2},    {3, {3, 1, 1, 1}, 4},
                        {3, {3, 2, 1}, 5},    {3, {3, 3}, 2},       {4, {5, 5}, 6},
                        {4, {6, 2, 2}, 39},   {4, {6, 3, 1}, 54},   {4, {6, 4}, 15},
                        {5, {10, 5}, 141}};
    for (const auto& r : rows) {
        const auto x = staircase(r.d);
        const auto g = kronecker({x, x, r.tau});
        if (g != r.g) o.fail("d=" + std::to_string(r.d) + " tau=" + r.tau.str() + " got " + g.str());
    }
    return o;
}

Outcome from_table(const TableCheck& t) {
    Outcome o;
    for (const auto& c : t.cells)
        if (!c.match) {
            std::string key;
            for (const auto& k : c.key) key += (key.empty() ? "" : " ") + k;
            o.fail(key + " expected " + c.expected + " computed " + c.computed);
        }
    return o;
}

Outcome ac3() {
    auto o = from_table(check_example2_m());
    const Partition mu{5, 4};
    for (const auto& tau : partitions_of(9)) {
        bool any = false;
        for (const auto& seq : example2_sequences())
            if (auto c = certify_with({mu, mu, tau}, seq, "column-2"); c && verify_certificate(*c)) any = true;
        if (!any) o.fail("no nonzero certified column for tau=" + tau.str());
    }
    if (!o.pass) o.detail = "every row certified nonzero; M values differ: " + o.detail;
    return o;
}

Outcome ac5() {
    Outcome o;
    const auto a = staircase_reduce(7, {21, 7});
    if (a.iterations() < 5 || a.steps[5].delta != 1) o.fail("(21,7)");
    const auto b = staircase_reduce(7, {21, 6, 1});
    if (b.iterations() < 4 || b.steps[4].delta != 0) o.fail("(21,6,1)");
    int count = 0;
    for (const auto& tau : partitions_of(28)) {
        if (tau[0] != 21 || tau[1] > 5) continue;
        ++count;
        const auto t = staircase_reduce(7, tau);
        if (t.iterations() < 4 || t.steps[4].delta != 1) o.fail(tau.str());
    }
    if (count == 0) o.fail("empty family");
    return o;
}

Outcome ac6() {
    Outcome o;
    for (int d = 1; d <= 7; ++d) {
        const auto r = verify_saxl_all(d);
        for (const auto& v : r.verdicts)
            if (!v.ok) o.fail("d=" + std::to_string(d) + " tau=" + v.tau.str() + ": " + v.failure);
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        const auto seq = project(theo2_sequence(n), 1);
        for (const auto& mu : partitions_of(n)) {
            if (!dominates(mu, mu_max(n))) continue;
            if (c_gen(seq, mu) <= 0) o.fail("c_gen = 0 at n=" + std::to_string(n) + " mu=" + mu.str());
            const auto r = theo2_certificate(n, mu);
            if (r.dim_column != 1 || !r.column_trivial)
                o.fail("column space not trivial of dim 1 at n=" + std::to_string(n));
            if (r.cert.m.value < 1) o.fail("M = 0 at mu=" + mu.str());
        }
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; a + b <= 10; ++b) {
            if (a + b == 0) continue;
            for (const auto& l : partitions_of(a))
                for (const auto& m : partitions_of(b)) {
                    const auto p = power_to_schur(schur_to_power(SchurPoly::schur(l)) *
                                                  schur_to_power(SchurPoly::schur(m)));
                    if (!(lr_product(l, m) == p)) o.fail("LR " + l.str() + " * " + m.str());
                }
        }
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& m : partitions_of(n))
                if (Integer(character_value(l, m)) != oracle::character_frobenius(l, m))
                    o.fail("character " + l.str() + " at " + m.str());
    for (int n = 1; n <= 6; ++n) {
        const auto seq = column_family(1, 0, n);
        const auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps)
                    if (Integer(multiplicity(seq, {a, b, c}).value) != kronecker({a, b, c}))
                        o.fail("trivial blocks at " + PartitionTriple{a, b, c}.str());
    }
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> len(0, 4), coord(-6, 9);
    for (int trial = 0; trial < 5000; ++trial) {
        const StarGraph g{{len(rng), len(rng), len(rng)}};
        auto random_vector = [&] {
            std::array<std::vector<std::int64_t>, 3> legs;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < g.leg_lengths[i]; ++j) legs[i].push_back(coord(rng));
            return DimVector::unchecked(g, coord(rng), legs);
        };
        const auto u = random_vector(), w = random_vector();
        const auto vs = vertices(g);
        const auto v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        if (cartan_form(reflect(u, v), reflect(w, v)) != cartan_form(u, w))
            o.fail("Cartan form not preserved at trial " + std::to_string(trial));
    }
    return o;
}

}  // namespace

int main() {
    run("AC1", "Kronecker values on staircase triples", ac1);
    run("AC2", "n=4 table, five M rows and their sums", [] { return from_table(check_example1()); });
    run("AC3", "n=9, mu=(5,4) M table, 30x4 values, every row nonzero", ac3);
    run("AC4", "root column for d <= 6", [] { return from_table(check_staircase()); });
    run("AC5", "staircase reduction at d=7", ac5);
    run("AC6", "three-case pipeline for d = 1..7", ac6);
    run("AC7", "column type sequence for (mu,mu,1^n), n <= 12", ac7);
    run("AC8", "oracle equivalences (LR, characters, trivial blocks, reflections)", ac8);
    std::printf("SKIP AC9: the q-polynomial itself, vanishing claims and g at n=21,28 are out of scope\n");
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
