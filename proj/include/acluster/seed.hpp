#pragma once

#include <map>
#include <optional>

#include "acluster/laurent.hpp"

namespace acluster {

// Label of an unlabeled seed on the exchange graph: Straight(m) has cluster
// {x_m, x_{m+1}, x_{m+2}}; Cyclic(m) has {x_m, w-or-z, x_{m+2}} with w for
// odd m and z for even m.
struct SeedLabel {
    enum class Kind { straight, cyclic };
    Kind kind = Kind::straight;
    int64_t m = 1;

    bool operator==(const SeedLabel&) const = default;
    auto operator<=>(const SeedLabel&) const = default;
    std::string str() const;
};

struct Seed {
    Matrix3 H;
    std::array<ClusterLaurent, 3> cluster;  // expansions in a fixed reference cluster
    std::array<TropElement, 3> coeffs;

    bool operator==(const Seed& o) const;
};

// permutation of {0,1,2}; p[i] = sigma(i)
using Perm = std::array<int, 3>;
std::string perm_cycle_str(const Perm& p);

Matrix3 mutate_matrix(const Matrix3& H, int k);  // k in 1..3
std::array<TropElement, 3> mutate_coeffs(const std::array<TropElement, 3>& y, const Matrix3& H, int k);
Seed mutate_cluster(const Seed& s, int k);  // full mutation of the seed in direction k
// seed with entries moved so that position sigma(i) holds old entry i
Seed relabel(const Seed& s, const Perm& sigma);
void assert_skew_symmetric(const Matrix3& H);

// permutation sigma with h_{sigma(i)sigma(j)} = h'_{ij}, s_{sigma(i)} = s'_i,
// y_{sigma(i)} = y'_i, if the seeds are equivalent
std::optional<Perm> seeds_equivalent(const Seed& a, const Seed& b);

struct Walk {
    std::map<SeedLabel, Seed> seeds;
    ClusterLaurent w;  // the two non-x cluster variables of the window
    ClusterLaurent z;
    const Seed& at(const SeedLabel& l) const;
};

// Builds the seeds Sigma_m, Sigma_m^cyc for |m| <= window from the given
// Sigma_1 by the directional mutations and relabelings of the exchange-graph
// diagram, checking the diagram arrows, the constancy of the exchange
// matrices and c_m = c_{m+2} along the way (throws on any failure).
Walk walk_exchange_graph(const Seed& sigma1, int window);

}  // namespace acluster
