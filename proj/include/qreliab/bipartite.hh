#ifndef QRELIAB_BIPARTITE_HH
#define QRELIAB_BIPARTITE_HH

#include <qreliab/kernels.hh>
#include <qreliab/numeric.hh>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qreliab {

inline constexpr std::size_t default_bipartite_cap = 24;

/// G = (R u T, S) with S a subset of R x T. Vertices keep declaration order;
/// edges are stored as (left index, right index), sorted, without repeats.
class BipartiteGraph
{
public:
    using Edge = std::pair<int, int>;

    BipartiteGraph() = default;
    BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right, std::vector<Edge> edges);

    const std::vector<std::string> & left() const noexcept { return _left; }
    const std::vector<std::string> & right() const noexcept { return _right; }
    const std::vector<Edge> & edges() const noexcept { return _edges; }
    int m() const noexcept { return static_cast<int>(_edges.size()); }
    int left_size() const noexcept { return static_cast<int>(_left.size()); }
    int right_size() const noexcept { return static_cast<int>(_right.size()); }

    kernels::BipartiteShape shape() const;

private:
    std::vector<std::string> _left, _right;
    std::vector<Edge> _edges;
};

/// Lines `left u`, `right w`, `edge u w`; `#` comments.
BipartiteGraph parse_graph(std::string_view text);
std::string serialize(const BipartiteGraph & graph);

struct Profile
{
    int i = 0, j = 0, c = 0, d = 0, dp = 0, e = 0;

    ProfileKey key() const { return {i, j, c, d, dp}; }
    bool operator==(const Profile &) const = default;
};

/// Edge statistics of (R', T'): contained (c), dangling from R' (d), dangling
/// from T' (d'), excluded (e). Bit k of a mask selects vertex k of that side;
/// bits beyond the side raise MembershipError.
Profile profile_stats(const BipartiteGraph & graph, std::uint64_t left_subset, std::uint64_t right_subset);

/// Number of pairs (R', T') with R' x T' disjoint from S, by enumeration.
Count independent_pair_count(const BipartiteGraph & graph, std::size_t cap = default_bipartite_cap);

/// X counts pairs by profile; Y = (2^r-1)^(|R|-i) (2^t-1)^(|T|-j) X. Only
/// nonzero cells are stored.
struct ProfileTable
{
    int left_size = 0, right_size = 0, m = 0;
    std::map<ProfileKey, Count> x;
    std::map<ProfileKey, Count> y;

    const Count & x_at(const ProfileKey & key) const;
    const Count & y_at(const ProfileKey & key) const;
};

ProfileTable x_table(const BipartiteGraph & graph, int r, int t, std::size_t cap = default_bipartite_cap);

/// (2^r-1)^(|R|-i) (2^t-1)^(|T|-j)
Count y_weight(int r, int t, int left_size, int right_size, int i, int j);

/// Number of independent-set pairs with |R'| = i and |T'| = j, indexed [i][j].
std::vector<std::vector<Count>> independent_pairs_by_size(const BipartiteGraph & graph,
        std::size_t cap = default_bipartite_cap);

} // namespace qreliab

#endif // QRELIAB_BIPARTITE_HH
