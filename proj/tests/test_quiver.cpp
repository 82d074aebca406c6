#include <random>

#include "doctest.h"

#include "ucert/quiver.hpp"

using namespace ucert;

namespace {

const StarGraph D4{{1, 1, 1}};

DimVector d4(std::int64_t c, std::int64_t a, std::int64_t b, std::int64_t e) {
    return DimVector(D4, c, {std::vector<std::int64_t>{a}, {b}, {e}});
}

DimVector unit(const StarGraph& g, Vertex v) {
    DimVector u(g, 0, {std::vector<std::int64_t>(g.leg_lengths[0], 0),
                       std::vector<std::int64_t>(g.leg_lengths[1], 0),
                       std::vector<std::int64_t>(g.leg_lengths[2], 0)});
    u.set(v, 1);
    return u;
}

RootClass root_of(const Partition& a, const Partition& b, const Partition& c) {
    return classify(dimvector_of({a, b, c}));
}

}  // namespace

TEST_CASE("Cartan pairing and reflections on D4") {
    const auto u = d4(4, 2, 2, 1);
    CHECK(cartan_pair(u, Vertex::centre()) == 3);
    CHECK(cartan_pair(d4(2, 1, 1, 1), Vertex::centre()) == 1);
    for (const auto& v : vertices(D4)) CHECK(cartan_pair(unit(D4, v), v) == 2);
    CHECK(reflect(u, Vertex::centre()) == d4(1, 2, 2, 1));
    for (const auto& v : vertices(D4)) CHECK(reflect(reflect(u, v), v) == u);
    CHECK(vertices(StarGraph{{2, 0, 1}}).size() == 4);
    CHECK(sigma(u, 3) == std::vector<std::int64_t>{3, 1});
}

TEST_CASE("reflections preserve the Cartan form, randomized") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 4), coord(-6, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        StarGraph g{{len(rng), len(rng), len(rng)}};
        auto random_vector = [&] {
            std::array<std::vector<std::int64_t>, 3> legs;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < g.leg_lengths[i]; ++j) legs[i].push_back(coord(rng));
            return DimVector::unchecked(g, coord(rng), legs);
        };
        const auto u = random_vector(), w = random_vector();
        const auto vs = vertices(g);
        const auto v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        const auto su = reflect(u, v), sw = reflect(w, v);
        CHECK(cartan_form(su, sw) == cartan_form(u, w));
        CHECK(cartan_form(u, w) == cartan_form(w, u));
        CHECK(reflect(su, v) == u);
        CHECK(su.height() - u.height() == -cartan_pair(u, v));
    }
}

TEST_CASE("dimension vectors of triples") {
    const auto v = dimvector_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(v.centre() == 3);
    for (int i = 1; i <= 3; ++i) CHECK(v.leg(i) == std::vector<std::int64_t>{2, 1});
    const auto w = dimvector_of({{2, 2}, {2, 2}, {3, 1}});
    CHECK(w.centre() == 4);
    CHECK(w.leg(1) == std::vector<std::int64_t>{2});
    CHECK(w.leg(3) == std::vector<std::int64_t>{1});
    const auto s = dimvector_of({{5}, {5}, {5}});
    CHECK(s.graph().vertex_count() == 1);
    CHECK(s.centre() == 5);
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                const PartitionTriple t{a, b, Partition{n}};
                const auto u = dimvector_of(t);
                CHECK(sigma(u, 1) == std::vector<std::int64_t>(a.parts().begin(), a.parts().end()));
                CHECK(triple_of(u) == t);
                CHECK(delta(u) == n - a[0] - b[0] - n);
            }
}

TEST_CASE("delta") {
    CHECK(delta(dimvector_of({{2, 2}, {2, 2}, {3, 1}})) == -3);
    CHECK(delta(dimvector_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 0);
}

TEST_CASE("reorder to partition") {
    const auto u = dimvector_of({{2, 1, 1}, {2, 2}, {4}});
    const auto r = reorder_to_partition(u);
    CHECK(r.trail.empty());
    CHECK(r.vector == u);
    // leg 1 with sigma (1,3,0): one reflection at [1,1] swaps it to (3,1,0)
    const auto v = DimVector(StarGraph{{2, 0, 0}}, 4, {std::vector<std::int64_t>{3, 0}, {}, {}});
    const auto rv = reorder_to_partition(v);
    CHECK(sigma(rv.vector, 1) == std::vector<std::int64_t>{3, 1, 0});
    CHECK(rv.trail.size() == 1);
    CHECK(rv.vector.centre() == 4);
}

TEST_CASE("fundamental region") {
    CHECK(is_fundamental_imaginary(dimvector_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})));
    CHECK_FALSE(is_fundamental_imaginary(dimvector_of({{2, 2}, {2, 2}, {3, 1}})));
    const auto x6 = staircase(6);
    CHECK(is_fundamental_imaginary(dimvector_of({x6, x6, {9, 9, 3}})));
    CHECK(is_fundamental_imaginary(dimvector_of({x6, x6, {9, 6, 5, 1}})));
    CHECK_FALSE(is_fundamental_imaginary(d4(0, 0, 0, 0)));
}

TEST_CASE("classify: named cases") {
    CHECK(classify(d4(2, 1, 1, 1)).tag == RootTag::Real);
    CHECK(classify(d4(1, 0, 0, 0)).tag == RootTag::Real);
    const auto nr = root_of({2, 2}, {2, 2}, {3, 1});
    CHECK(nr.tag == RootTag::NotRoot);
    CHECK(classify(d4(1, 0, 1, 0)).tag == RootTag::Real);
    CHECK(classify(d4(0, 1, 0, 1)).tag == RootTag::NotRoot);
    CHECK(classify(d4(3, 1, 1, 1)).tag == RootTag::NotRoot);

    const auto x5 = staircase(5);
    const auto r5 = root_of(x5, x5, {9, 6});
    CHECK(r5.tag == RootTag::Real);
    const auto e5 = dynkin_equivalent(r5);
    REQUIRE(e5.has_value());
    CHECK(*e5 == PartitionTriple{{1, 1, 1}, {1, 1, 1}, {2, 1}});

    const auto x4 = staircase(4);
    const auto r4 = root_of(x4, x4, {5, 4, 1});
    CHECK(r4.tag == RootTag::Real);
    const auto e4 = dynkin_equivalent(r4);
    REQUIRE(e4.has_value());
    CHECK(*e4 == PartitionTriple{{1, 1}, {1, 1}, {1, 1}});

    const auto x6 = staircase(6);
    const auto r6 = root_of(x6, x6, {15, 6});
    CHECK(r6.tag == RootTag::Real);
    CHECK(dynkin_equivalent(r6) == PartitionTriple{{1, 1, 1}, {1, 1, 1}, {2, 1}});
}

TEST_CASE("classify: trails replay to the terminal") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                for (const auto& c : partitions_of(n)) {
                    const auto u = dimvector_of({a, b, c});
                    const auto rc = classify(u);
                    CHECK(replay(u, rc.trail) == rc.terminal);
                    if (rc.tag == RootTag::Real) CHECK(is_simple_root(rc.terminal));
                    if (rc.tag == RootTag::Imaginary) CHECK(is_fundamental_imaginary(rc.terminal));
                    if (rc.tag == RootTag::NotRoot)
                        CHECK((rc.terminal.has_negative() || !has_connected_support(rc.terminal)));
                }
}

TEST_CASE("two columns and tau: a root unless tau = (n)") {
    // tau = (n) leaves the third leg empty and v is n in the middle of a long A-chain
    for (int n = 1; n <= 7; ++n)
        for (const auto& tau : partitions_of(n))
            CHECK(root_of(column(n), column(n), tau).is_root() == (n == 1 || tau != Partition{n}));
}

TEST_CASE("((2^2),(2^2),tau) is never a root") {
    for (const auto& tau : partitions_of(4)) CHECK_FALSE(root_of({2, 2}, {2, 2}, tau).is_root());
}

TEST_CASE("finite-type stars") {
    CHECK(is_dynkin_star(1, 1, 1));
    CHECK(is_dynkin_star(2, 2, 1));
    CHECK(is_dynkin_star(4, 2, 1));
    CHECK(is_dynkin_star(7, 0, 0));
    CHECK(is_dynkin_star(7, 1, 1));
    CHECK_FALSE(is_dynkin_star(2, 2, 2));
    CHECK_FALSE(is_dynkin_star(5, 2, 1));
    CHECK_FALSE(is_dynkin_star(3, 3, 1));
}

TEST_CASE("DimVector rejects bad input") {
    CHECK_THROWS_AS(DimVector(D4, -1, {std::vector<std::int64_t>{0}, {0}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(DimVector(D4, 1, {std::vector<std::int64_t>{0, 0}, {0}, {0}}), std::invalid_argument);
    CHECK_NOTHROW(DimVector::unchecked(D4, -1, {std::vector<std::int64_t>{0}, {0}, {0}}));
}

TEST_CASE("staircase reduction, d = 7") {
    const auto a = staircase_reduce(7, {21, 7});
    CHECK(a.iterations() == 5);
    CHECK(a.last().delta == 1);
    CHECK(is_fundamental_imaginary(a.last().vector));
    const auto b = staircase_reduce(7, {21, 6, 1});
    CHECK(b.iterations() == 4);
    CHECK(b.last().delta == 0);
    CHECK(is_fundamental_imaginary(b.last().vector));
    for (const auto& tau : partitions_of(28)) {
        if (tau[0] != 21 || tau[1] > 5) continue;
        const auto t = staircase_reduce(7, tau);
        CHECK(t.steps[4].delta == 1);
    }
}

TEST_CASE("staircase reduction, d = 8 and 9, every tau in range") {
    const auto d8 = staircase_reduce(8, {21, 15});
    CHECK(d8.k == 1);
    CHECK(d8.iterations() == 1);
    CHECK(d8.last().delta == 1);
    for (int d : {8, 9}) {
        const int n = d * (d + 1) / 2;
        int count = 0;
        for (const auto& tau : partitions_of(n)) {
            if (tau[0] <= n - 2 * d || tau[0] > n - d) continue;
            const auto t = staircase_reduce(d, tau);
            CHECK(t.last().delta >= 0);
            CHECK(is_fundamental_imaginary(t.last().vector));
            if (t.ineq2_holds)
                for (int m = 0; m <= t.iterations(); ++m) {
                    CHECK(t.steps[m].delta == -t.k + 2 * m);
                    CHECK_FALSE(t.steps[m].third_leg_resorted);
                }
            ++count;
        }
        CHECK(count > 0);
    }
    CHECK_THROWS(staircase_reduce(8, {30, 6}));
}
