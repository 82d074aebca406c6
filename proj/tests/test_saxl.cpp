#include "doctest.h"

#include "ucert/saxl.hpp"

using namespace ucert;

TEST_CASE("named verdicts") {
    const auto a = verify_saxl_case(5, {10, 5});
    CHECK(a.ok);
    CHECK(a.tag == SaxlTag::TableCertificate);
    REQUIRE(a.evidence.g.has_value());
    CHECK(*a.evidence.g == 141);
    CHECK(a.evidence.root->tag == RootTag::NotRoot);

    const auto b = verify_saxl_case(6, {15, 6});
    CHECK(b.ok);
    CHECK(b.tag == SaxlTag::RealRoot);
    CHECK(b.evidence.equivalent == PartitionTriple{{1, 1, 1}, {1, 1, 1}, {2, 1}});

    const auto c = verify_saxl_case(2, {1, 1, 1});
    CHECK(c.ok);
    CHECK(c.tag == SaxlTag::TableCertificate);
    CHECK(*c.evidence.g == 1);

    const auto d = verify_saxl_case(7, {21, 6, 1});
    CHECK(d.ok);
    CHECK(d.tag == SaxlTag::ImaginaryViaReduction);
    REQUIRE(d.evidence.trajectory.has_value());
    CHECK(d.evidence.trajectory->last().delta == 0);

    const auto e = verify_saxl_case(1, {1});
    CHECK(e.ok);
    CHECK(e.tag == SaxlTag::RealRoot);

    const auto f = verify_saxl_case(4, {7, 2, 1});
    CHECK(f.ok);
    CHECK(f.tag == SaxlTag::DominanceKronecker);
    CHECK(f.evidence.dominance == Comparability::XiBelowTau);
    CHECK(*f.evidence.g > 0);

    const auto g = verify_saxl_case(6, {20, 1});
    CHECK(g.ok);
    CHECK(g.tag == SaxlTag::DominanceKronecker);
    CHECK(g.evidence.external);
    CHECK_FALSE(g.evidence.g.has_value());

    CHECK(verify_saxl_case(6, {9, 9, 3}).tag == SaxlTag::FundamentalImaginary);
    CHECK_THROWS_AS(verify_saxl_case(3, {5}), std::invalid_argument);
}

TEST_CASE("every tau passes for d = 1..7") {
    const int p[] = {0, 1, 3, 11, 42, 176, 792, 3718};
    for (int d = 1; d <= 7; ++d) {
        const auto r = verify_saxl_all(d);
        CHECK(r.verdicts.size() == static_cast<std::size_t>(p[d]));
        CHECK_MESSAGE(r.all_pass(), "d=" << d);
        for (const auto& v : r.verdicts)
            if (!v.ok) FAIL_CHECK(v.tau.str() << ": " << v.failure);
        CHECK(std::is_sorted(r.verdicts.begin(), r.verdicts.end(),
                             [](const auto& x, const auto& y) { return x.tau < y.tau; }));
    }
    CHECK_THROWS_AS(verify_saxl_all(8), FeasibilityError);
}

TEST_CASE("d = 3 split") {
    const auto r = verify_saxl_all(3);
    int g_rows = 0;
    for (const auto& v : r.verdicts)
        if (v.evidence.g) ++g_rows;
    CHECK(r.counts.at(SaxlTag::TableCertificate) == 4);
    CHECK(g_rows >= 4);
}

TEST_CASE("verdicts do not depend on the thread count") {
    SaxlOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = verify_saxl_all(5, one), b = verify_saxl_all(5, four);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].tag == b.verdicts[i].tag);
        CHECK(a.verdicts[i].evidence.g == b.verdicts[i].evidence.g);
    }
    CHECK(a.counts == b.counts);
}

TEST_CASE("column certificate for (mu, mu, 1^n), n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        const auto top = mu_max(n);
        for (const auto& mu : partitions_of(n)) {
            if (!dominates(mu, top)) {
                CHECK_THROWS_AS(theo2_certificate(n, mu), std::invalid_argument);
                continue;
            }
            const auto r = theo2_certificate(n, mu);
            CHECK(r.cert.m.value >= 1);
            CHECK(r.dim_mu >= 1);
            CHECK(r.dim_column == 1);
            CHECK(r.column_trivial);
            CHECK(r.cert.seq == theo2_sequence(n));
            CHECK(verify_certificate(r.cert));
        }
    }
    CHECK(theo2_sequence(2) == column_family(2, 1, 2));
    CHECK(theo2_certificate(2, {1, 1}).cert.m.value == 1);
    CHECK(theo2_certificate(9, {5, 4}).cert.m.value == 1);
    CHECK(theo2_certificate(4, {2, 2}).cert.m.value == 1);
}

TEST_CASE("scan for small n") {
    for (int n = 2; n <= 6; ++n) {
        const auto r = conjecture_scan(n);
        CHECK(r.inconclusive == 0);
        CHECK(r.certified == static_cast<int>(r.entries.size()));
        for (const auto& e : r.entries) {
            REQUIRE(e.cert.has_value());
            CHECK(verify_certificate(*e.cert));
            CHECK(e.mu[0] <= (n + 1) / 2);
        }
    }
    const auto four = conjecture_scan(4);
    CHECK(four.entries.size() == 3 * 5);
    const auto two = conjecture_scan(2);
    REQUIRE(two.entries.size() == 2);
    CHECK(two.entries.front().tau == Partition{2});
    // v for ((1^2),(1^2),(2)) is (1,2,1) on A3, not a root; g = 1 certifies it
    CHECK(two.entries.front().cert->rule == "kronecker");
    CHECK(two.entries.back().cert->rule == "root");
    CHECK_THROWS_AS(conjecture_scan(9), FeasibilityError);
}
