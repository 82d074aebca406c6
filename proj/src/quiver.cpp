#include "ucert/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "ucert/arith.hpp"

namespace ucert {

std::string Vertex::str() const {
    if (is_centre()) return "0";
    return "[" + std::to_string(leg) + "," + std::to_string(pos) + "]";
}

std::vector<Vertex> vertices(const StarGraph& g) {
    std::vector<Vertex> vs{Vertex::centre()};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= g.leg_lengths[i - 1]; ++j) vs.push_back({i, j});
    return vs;
}

// --- DimVector ------------------------------------------------------------

DimVector DimVector::unchecked(const StarGraph& g, std::int64_t centre,
                               std::array<std::vector<std::int64_t>, 3> legs) {
    for (int i = 0; i < 3; ++i)
        if (static_cast<int>(legs[i].size()) != g.leg_lengths[i])
            throw std::invalid_argument("DimVector: leg " + std::to_string(i + 1) +
                                        " does not match the graph");
    DimVector u;
    u.graph_ = g;
    u.centre_ = centre;
    u.legs_ = std::move(legs);
    return u;
}

DimVector::DimVector(const StarGraph& g, std::int64_t centre,
                     std::array<std::vector<std::int64_t>, 3> legs)
    : DimVector(unchecked(g, centre, std::move(legs))) {
    if (has_negative()) throw std::invalid_argument("DimVector: negative coordinate");
}

std::int64_t DimVector::at(Vertex v) const {
    if (v.is_centre()) return centre_;
    if (v.leg < 1 || v.leg > 3 || v.pos < 1 || v.pos > graph_.leg_lengths[v.leg - 1])
        throw std::out_of_range("bad vertex " + v.str());
    return legs_[v.leg - 1][v.pos - 1];
}

void DimVector::set(Vertex v, std::int64_t value) {
    if (v.is_centre()) {
        centre_ = value;
        return;
    }
    if (v.leg < 1 || v.leg > 3 || v.pos < 1 || v.pos > graph_.leg_lengths[v.leg - 1])
        throw std::out_of_range("bad vertex " + v.str());
    legs_[v.leg - 1][v.pos - 1] = value;
}

std::int64_t DimVector::height() const {
    std::int64_t h = centre_;
    for (const auto& l : legs_)
        for (auto x : l) h = checked_add(h, x);
    return h;
}

bool DimVector::is_zero() const {
    if (centre_ != 0) return false;
    for (const auto& l : legs_)
        for (auto x : l)
            if (x != 0) return false;
    return true;
}

bool DimVector::has_negative() const {
    if (centre_ < 0) return true;
    for (const auto& l : legs_)
        for (auto x : l)
            if (x < 0) return true;
    return false;
}

std::vector<std::int64_t> DimVector::flat() const {
    std::vector<std::int64_t> out{centre_};
    for (const auto& l : legs_) out.insert(out.end(), l.begin(), l.end());
    return out;
}

std::string DimVector::str() const {
    std::ostringstream s;
    s << centre_;
    for (int i = 0; i < 3; ++i) {
        s << (i == 0 ? "; " : " | ");
        for (std::size_t j = 0; j < legs_[i].size(); ++j) s << (j ? "," : "") << legs_[i][j];
    }
    return s.str();
}

// --- Cartan data ----------------------------------------------------------

namespace {

std::int64_t first_on_leg(const DimVector& u, int leg) {
    const auto& l = u.leg(leg);
    return l.empty() ? 0 : l.front();
}

std::int64_t neighbour_sum(const DimVector& u, Vertex v) {
    if (v.is_centre())
        return checked_add(checked_add(first_on_leg(u, 1), first_on_leg(u, 2)), first_on_leg(u, 3));
    const auto& l = u.leg(v.leg);
    const std::int64_t prev = v.pos == 1 ? u.centre() : l[v.pos - 2];
    const std::int64_t next = v.pos < static_cast<int>(l.size()) ? l[v.pos] : 0;
    return checked_add(prev, next);
}

}  // namespace

std::int64_t cartan_pair(const DimVector& u, Vertex i) {
    return checked_add(checked_mul(2, u.at(i)), -neighbour_sum(u, i));
}

std::int64_t cartan_form(const DimVector& u, const DimVector& w) {
    if (!(u.graph() == w.graph())) throw std::invalid_argument("cartan_form: graph mismatch");
    std::int64_t acc = 0;
    for (const auto& v : vertices(u.graph()))
        acc = checked_add(acc, checked_mul(u.at(v), cartan_pair(w, v)));
    return acc;
}

DimVector reflect(const DimVector& u, Vertex i) {
    DimVector r = u;
    r.set(i, checked_add(neighbour_sum(u, i), -u.at(i)));
    return r;
}

DimVector replay(DimVector u, const std::vector<Vertex>& trail) {
    for (const auto& v : trail) u = reflect(u, v);
    return u;
}

std::int64_t delta(const DimVector& u) {
    std::int64_t d = u.centre();
    for (int i = 1; i <= 3; ++i) d = checked_add(d, -(u.centre() - first_on_leg(u, i)));
    return d;
}

DimVector dimvector_of(const PartitionTriple& mu) {
    const int n = mu.size();
    StarGraph g;
    std::array<std::vector<std::int64_t>, 3> legs;
    for (int i = 0; i < 3; ++i) {
        const auto& p = mu[i];
        g.leg_lengths[i] = std::max(0, p.length() - 1);
        std::int64_t running = n;
        for (int j = 0; j + 1 < p.length(); ++j) {
            running -= p[j];
            legs[i].push_back(running);
        }
    }
    return DimVector(g, n, std::move(legs));
}

std::vector<std::int64_t> sigma(const DimVector& u, int leg) {
    const auto& l = u.leg(leg);
    std::vector<std::int64_t> s;
    std::int64_t prev = u.centre();
    for (auto x : l) {
        s.push_back(prev - x);
        prev = x;
    }
    s.push_back(prev);
    return s;
}

Reordered reorder_to_partition(const DimVector& u) {
    for (int i = 1; i <= 3; ++i)
        for (auto x : sigma(u, i))
            if (x < 0)
                throw std::invalid_argument("reorder_to_partition: negative difference on leg " +
                                            std::to_string(i));
    Reordered out{u, {}};
    for (int i = 1; i <= 3; ++i) {
        const int r = u.graph().leg_lengths[i - 1];
        bool moved = true;
        while (moved) {
            moved = false;
            for (int j = 1; j <= r; ++j) {
                // positive pairing at [i,j] <=> sigma_j < sigma_{j+1}
                if (cartan_pair(out.vector, {i, j}) > 0) {
                    out.vector = reflect(out.vector, {i, j});
                    out.trail.push_back({i, j});
                    moved = true;
                    break;
                }
            }
        }
    }
    return out;
}

std::optional<PartitionTriple> triple_of(const DimVector& u) {
    if (u.centre() <= 0) return std::nullopt;
    Partition ps[3];
    for (int i = 1; i <= 3; ++i) {
        const auto s = sigma(u, i);
        std::vector<int> parts;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j] < 0 || (j > 0 && s[j] > s[j - 1])) return std::nullopt;
            if (s[j] > 0) parts.push_back(static_cast<int>(s[j]));
        }
        ps[i - 1] = Partition(std::move(parts));
    }
    return PartitionTriple(ps[0], ps[1], ps[2]);
}

bool has_connected_support(const DimVector& u) {
    if (u.is_zero()) return false;
    if (u.centre() != 0) {
        // each leg must be nonzero on a prefix only
        for (int i = 1; i <= 3; ++i) {
            bool ended = false;
            for (auto x : u.leg(i)) {
                if (x == 0) ended = true;
                else if (ended) return false;
            }
        }
        return true;
    }
    int legs_used = 0;
    for (int i = 1; i <= 3; ++i) {
        const auto& l = u.leg(i);
        int runs = 0;
        bool in_run = false;
        for (auto x : l) {
            if (x != 0 && !in_run) ++runs;
            in_run = x != 0;
        }
        if (runs > 1) return false;
        if (runs == 1) ++legs_used;
    }
    return legs_used == 1;
}

bool is_simple_root(const DimVector& u) {
    return !u.has_negative() && u.height() == 1;
}

bool is_fundamental_imaginary(const DimVector& u) {
    if (!has_connected_support(u)) return false;
    for (const auto& v : vertices(u.graph()))
        if (cartan_pair(u, v) > 0) return false;
    return true;
}

const char* to_string(RootTag t) {
    switch (t) {
        case RootTag::Real: return "Real";
        case RootTag::Imaginary: return "Imaginary";
        case RootTag::NotRoot: return "NotRoot";
    }
    return "?";
}

RootClass classify(const DimVector& input) {
    if (input.is_zero()) throw std::invalid_argument("classify: zero vector");
    if (input.has_negative()) throw std::invalid_argument("classify: negative coordinate");

    RootClass rc;
    DimVector u = input;
    const auto order = vertices(u.graph());
    while (true) {
        if (u.has_negative() || !has_connected_support(u)) {
            rc.tag = RootTag::NotRoot;
            break;
        }
        if (is_simple_root(u)) {
            rc.tag = RootTag::Real;
            break;
        }
        bool moved = false;
        for (std::size_t k = 1; k < order.size(); ++k) {
            if (cartan_pair(u, order[k]) > 0) {
                u = reflect(u, order[k]);
                rc.trail.push_back(order[k]);
                moved = true;
                break;
            }
        }
        if (moved) continue;
        rc.checkpoints.push_back(u);
        if (cartan_pair(u, Vertex::centre()) <= 0) {
            rc.tag = RootTag::Imaginary;
            break;
        }
        u = reflect(u, Vertex::centre());
        rc.trail.push_back(Vertex::centre());
    }
    rc.terminal = std::move(u);
    return rc;
}

bool is_dynkin_star(int a1, int a2, int a3) {
    // T(p,q,r) is finite type iff 1/p + 1/q + 1/r > 1
    const long p = a1 + 1, q = a2 + 1, r = a3 + 1;
    return q * r + p * r + p * q > p * q * r;
}

std::optional<PartitionTriple> dynkin_equivalent(const RootClass& rc) {
    if (rc.tag != RootTag::Real) return std::nullopt;
    for (const auto& c : rc.checkpoints) {
        if (c.centre() <= 0) continue;
        int arms[3];
        for (int i = 1; i <= 3; ++i)
            arms[i - 1] = static_cast<int>(std::count_if(c.leg(i).begin(), c.leg(i).end(),
                                                         [](std::int64_t x) { return x != 0; }));
        if (is_dynkin_star(arms[0], arms[1], arms[2])) return triple_of(c);
    }
    return std::nullopt;
}

// --- staircase reduction --------------------------------------------------

bool staircase_ineq2(int d, int k) {
    const long lhs = 2L * d * d - 14L * d;
    const long rhs = static_cast<long>(k) * k - 6L * k + (k % 2 ? 1 : 0);
    return lhs >= rhs;
}

StaircaseTrajectory staircase_reduce(int d, const Partition& tau) {
    if (d < 7) throw std::invalid_argument("staircase_reduce: requires d >= 7");
    const int n = d * (d + 1) / 2;
    if (tau.size() != n) throw std::invalid_argument("staircase_reduce: |tau| must be d(d+1)/2");
    if (!(n - 2 * d < tau[0] && tau[0] <= n - d))
        throw std::invalid_argument("staircase_reduce: requires n-2d < tau_1 <= n-d");

    StaircaseTrajectory t;
    t.d = d;
    t.k = tau[0] - (n - 2 * d);
    t.ineq2_holds = staircase_ineq2(d, t.k);

    // (eq1): n >= 4d, needed for the first step; holds for every d >= 7.
    if (n < 4 * d) throw ReductionError("inequality n >= 4d fails for d=" + std::to_string(d));
    if (d >= 8 && !t.ineq2_holds)
        throw ReductionError("inequality 2d^2-14d >= k^2-6k[+1] fails for d=" + std::to_string(d) +
                             ", k=" + std::to_string(t.k));

    const auto xi = staircase(d);
    DimVector v = dimvector_of({xi, xi, tau});
    t.steps.push_back({v, delta(v), false});

    const int max_iterations = t.k + 4;
    for (int m = 1; t.steps.back().delta < 0; ++m) {
        if (m > max_iterations)
            throw ReductionError("staircase_reduce: no fundamental vector after " +
                                 std::to_string(max_iterations) + " iterations");
        const DimVector w = reflect(v, Vertex::centre());
        for (int i = 1; i <= 3; ++i)
            for (auto x : sigma(w, i))
                if (x < 0)
                    throw ReductionError("s_0(v^(" + std::to_string(m - 1) +
                                         ")) leaves (N^I)*: negative difference on leg " +
                                         std::to_string(i));
        const auto s3 = sigma(w, 3);
        const bool third = !std::is_sorted(s3.begin(), s3.end(), std::greater<>());
        v = reorder_to_partition(w).vector;
        const auto dv = delta(v);
        t.steps.push_back({v, dv, third});
        if (t.ineq2_holds) {
            if (third)
                throw ReductionError("sigma^3 is not a partition at m=" + std::to_string(m) +
                                     ": n-2d-(m-1)k+m(m-1) >= 2d-k >= tau_2 fails");
            if (dv != -t.k + 2 * m)
                throw ReductionError("delta(v^(" + std::to_string(m) + ")) = " + std::to_string(dv) +
                                     ", expected -k+2m = " + std::to_string(-t.k + 2 * m));
        }
    }
    if (!is_fundamental_imaginary(v))
        throw ReductionError("staircase_reduce: terminal vector is not in M");
    return t;
}

}  // namespace ucert
