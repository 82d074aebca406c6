#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucert/partition.hpp"

namespace ucert {

/// Three-legged star: central vertex 0 and legs [i,1..r_i], i = 1,2,3.
struct StarGraph {
    std::array<int, 3> leg_lengths{0, 0, 0};

    int vertex_count() const noexcept {
        return 1 + leg_lengths[0] + leg_lengths[1] + leg_lengths[2];
    }
    bool operator==(const StarGraph&) const = default;
};

/// Vertex of a star: leg 0 is the centre (pos 0); otherwise [leg, pos] with
/// 1 <= leg <= 3 and 1 <= pos <= r_leg.
struct Vertex {
    int leg = 0;
    int pos = 0;

    static constexpr Vertex centre() { return {0, 0}; }
    bool is_centre() const noexcept { return leg == 0; }
    bool operator==(const Vertex&) const = default;
    std::string str() const;
};

/// Vertices in canonical order: 0, [1,1], [1,2], ..., [2,1], ..., [3,r3].
std::vector<Vertex> vertices(const StarGraph& g);

/// Integer vector on the vertices of a star.
class DimVector {
public:
    DimVector() = default;
    /// Rejects negative coordinates and leg vectors that do not match the graph.
    DimVector(const StarGraph& g, std::int64_t centre, std::array<std::vector<std::int64_t>, 3> legs);

    /// Same, without the sign check; for classification internals and tests
    /// that need transient negative entries.
    static DimVector unchecked(const StarGraph& g, std::int64_t centre,
                               std::array<std::vector<std::int64_t>, 3> legs);

    const StarGraph& graph() const noexcept { return graph_; }
    std::int64_t centre() const noexcept { return centre_; }
    const std::vector<std::int64_t>& leg(int i) const { return legs_.at(i - 1); }

    std::int64_t at(Vertex v) const;
    void set(Vertex v, std::int64_t value);

    std::int64_t height() const;
    bool is_zero() const;
    bool has_negative() const;
    std::vector<std::int64_t> flat() const;

    bool operator==(const DimVector&) const = default;
    std::string str() const;

private:
    StarGraph graph_;
    std::int64_t centre_ = 0;
    std::array<std::vector<std::int64_t>, 3> legs_;
};

/// (u, e_i) = 2 u_i - sum of neighbours.
std::int64_t cartan_pair(const DimVector& u, Vertex i);

/// Symmetric bilinear form (u, w) = sum_i u_i (w, e_i).
std::int64_t cartan_form(const DimVector& u, const DimVector& w);

/// Fundamental reflection s_i.
DimVector reflect(const DimVector& u, Vertex i);

/// Apply reflections in order.
DimVector replay(DimVector u, const std::vector<Vertex>& trail);

/// delta(u) = u_0 - sum_i (u_0 - u_[i,1]), with u_[i,1] = 0 on an absent leg.
std::int64_t delta(const DimVector& u);

/// v_mu on Gamma_mu: centre n, [i,j] carries n - (mu^i_1 + ... + mu^i_j).
DimVector dimvector_of(const PartitionTriple& mu);

/// Successive leg differences (u_0 - u_[i,1], ..., u_[i,r_i]).
std::vector<std::int64_t> sigma(const DimVector& u, int leg);

struct Reordered {
    DimVector vector;
    std::vector<Vertex> trail;
};

/// Sorts every sigma^i into non-increasing order with leg reflections.
/// Requires all sigma entries to be nonnegative.
Reordered reorder_to_partition(const DimVector& u);

/// The triple with v_mu = u (zero parts dropped) if every sigma^i is a
/// nonnegative non-increasing sequence and the centre is positive.
std::optional<PartitionTriple> triple_of(const DimVector& u);

bool has_connected_support(const DimVector& u);
bool is_simple_root(const DimVector& u);

/// Membership in the fundamental region M: nonzero, connected support, and
/// (e_i, u) <= 0 at every vertex.
bool is_fundamental_imaginary(const DimVector& u);

enum class RootTag { Real, Imaginary, NotRoot };
const char* to_string(RootTag t);

struct RootClass {
    RootTag tag = RootTag::NotRoot;
    /// Reflections applied, in order, from the input.
    std::vector<Vertex> trail;
    /// e_i (Real), a vector of M (Imaginary), or the first vector with a
    /// negative coordinate or disconnected support (NotRoot).
    DimVector terminal;
    /// Vectors met with every leg sorted, just before each central
    /// reflection (and the final one for Imaginary).
    std::vector<DimVector> checkpoints;

    bool is_root() const noexcept { return tag != RootTag::NotRoot; }
};

/// Height reduction. Leg vertices are tried first in canonical order and the
/// centre last, so a v_mu is reduced by alternating s_0 with a full re-sort
/// of the legs.
RootClass classify(const DimVector& u);

/// True iff the star with the given number of vertices per leg is of finite type.
bool is_dynkin_star(int a1, int a2, int a3);

/// For a Real classification: the first checkpoint whose support is a
/// finite-type star, read back as a triple.
std::optional<PartitionTriple> dynkin_equivalent(const RootClass& rc);

struct ReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StaircaseStep {
    DimVector vector;
    std::int64_t delta;
    /// The third leg needed re-sorting at this step.
    bool third_leg_resorted = false;
};

struct StaircaseTrajectory {
    int d = 0;
    int k = 0;
    /// 2d^2 - 14d >= k^2 - 6k (+1 if k odd); when it holds the delta values
    /// follow -k + 2m exactly and the third leg is never re-sorted.
    bool ineq2_holds = false;
    std::vector<StaircaseStep> steps;

    const StaircaseStep& last() const { return steps.back(); }
    int iterations() const { return static_cast<int>(steps.size()) - 1; }
};

bool staircase_ineq2(int d, int k);

/// Iterates s_0 followed by leg re-sorting from v_(xi_d, xi_d, tau) until
/// delta >= 0. Requires |tau| = d(d+1)/2, n-2d < tau_1 <= n-d, d >= 7.
StaircaseTrajectory staircase_reduce(int d, const Partition& tau);

}  // namespace ucert
