#include <qreliab/bipartite.hh>
#include <qreliab/errors.hh>

#include "text.hh"

#include <algorithm>
#include <bit>
#include <set>

namespace qreliab {

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right, std::vector<Edge> edges) :
    _left(std::move(left)),
    _right(std::move(right)),
    _edges(std::move(edges))
{
    std::set<std::string> names;
    for (auto * side : {&_left, &_right})
        for (auto & v : *side)
            if (! names.insert(v).second)
                throw InvalidArgumentError("duplicate vertex '" + v + "'");
    for (auto [u, w] : _edges)
        if (u < 0 || u >= left_size() || w < 0 || w >= right_size())
            throw MembershipError("edge endpoint out of range");
    std::sort(_edges.begin(), _edges.end());
    if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
        throw InvalidArgumentError("duplicate edge");
}

kernels::BipartiteShape BipartiteGraph::shape() const
{
    return {left_size(), right_size(), _edges};
}

BipartiteGraph parse_graph(std::string_view graph_text)
{
    std::vector<std::string> left, right;
    std::vector<BipartiteGraph::Edge> edges;
    std::map<std::string, std::pair<bool, int>> vertices; // name -> (is_left, index)
    std::set<BipartiteGraph::Edge> seen_edges;

    std::size_t line_no = 0;
    for (auto line : text::lines(graph_text)) {
        ++line_no;
        text::Cursor cur(line, line_no);
        cur.skip_blanks();
        if (cur.at_end() || cur.peek('#'))
            continue;
        auto keyword = cur.take_while(text::is_name_char);
        auto name = [&] {
            if (! cur.skip_blanks())
                cur.fail("expected a vertex name");
            return cur.constant_name(false);
        };

        if (keyword == "left" || keyword == "right") {
            auto column = cur.column() + 1;
            auto v = name();
            bool is_left = keyword == "left";
            auto & side = is_left ? left : right;
            if (! vertices.emplace(v, std::pair{is_left, static_cast<int>(side.size())}).second)
                throw ParseError("duplicate vertex declaration '" + v + "'", line_no, column);
            side.push_back(v);
        }
        else if (keyword == "edge") {
            auto column = cur.column() + 1;
            auto u = name();
            auto w = name();
            auto iu = vertices.find(u), iw = vertices.find(w);
            if (iu == vertices.end() || ! iu->second.first)
                throw ParseError("unknown left endpoint '" + u + "'", line_no, column);
            if (iw == vertices.end() || iw->second.first)
                throw ParseError("unknown right endpoint '" + w + "'", line_no, column);
            BipartiteGraph::Edge edge{iu->second.second, iw->second.second};
            if (! seen_edges.insert(edge).second)
                throw ParseError("duplicate edge " + u + " " + w, line_no, column);
            edges.push_back(edge);
        }
        else
            throw ParseError("expected 'left', 'right' or 'edge'", line_no, 1);

        cur.skip_blanks();
        if (! cur.at_end())
            cur.fail("trailing characters");
    }
    return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

std::string serialize(const BipartiteGraph & graph)
{
    std::string out;
    for (auto & u : graph.left())
        out += "left " + u + "\n";
    for (auto & w : graph.right())
        out += "right " + w + "\n";
    for (auto [u, w] : graph.edges())
        out += "edge " + graph.left()[u] + " " + graph.right()[w] + "\n";
    return out;
}

Profile profile_stats(const BipartiteGraph & graph, std::uint64_t left_subset, std::uint64_t right_subset)
{
    auto fits = [](std::uint64_t subset, int size) { return size >= 64 || (subset >> size) == 0; };
    if (! fits(left_subset, graph.left_size()) || ! fits(right_subset, graph.right_size()))
        throw MembershipError("subset mentions a vertex outside the graph");

    Profile p;
    p.i = std::popcount(left_subset);
    p.j = std::popcount(right_subset);
    for (auto [u, w] : graph.edges()) {
        bool in_left = (left_subset >> u) & 1, in_right = (right_subset >> w) & 1;
        if (in_left && in_right)
            ++p.c;
        else if (in_left)
            ++p.d;
        else if (in_right)
            ++p.dp;
    }
    p.e = graph.m() - p.c - p.d - p.dp;
    return p;
}

namespace
{
    void check_cap(const BipartiteGraph & graph, std::size_t cap)
    {
        auto n = static_cast<std::size_t>(graph.left_size() + graph.right_size());
        if (cap > max_enumeration_width)
            throw InvalidArgumentError("bipartite enumeration cap exceeds " + std::to_string(max_enumeration_width));
        if (n > cap)
            throw CapExceededError("bipartite pair enumeration", n, cap);
    }

    const Count zero = 0;
}

Count independent_pair_count(const BipartiteGraph & graph, std::size_t cap)
{
    check_cap(graph, cap);
    Count total = 0;
    for (auto & [key, count] : kernels::omp::profile_histogram(graph.shape()))
        if (key.c == 0)
            total += static_cast<unsigned long>(count);
    return total;
}

Count y_weight(int r, int t, int left_size, int right_size, int i, int j)
{
    Count a, b;
    mpz_pow_ui(a.get_mpz_t(), Count(pow2(r) - 1).get_mpz_t(), left_size - i);
    mpz_pow_ui(b.get_mpz_t(), Count(pow2(t) - 1).get_mpz_t(), right_size - j);
    return a * b;
}

const Count & ProfileTable::x_at(const ProfileKey & key) const
{
    auto it = x.find(key);
    return it == x.end() ? zero : it->second;
}

const Count & ProfileTable::y_at(const ProfileKey & key) const
{
    auto it = y.find(key);
    return it == y.end() ? zero : it->second;
}

ProfileTable x_table(const BipartiteGraph & graph, int r, int t, std::size_t cap)
{
    if (r < 1 || t < 1)
        throw InvalidArgumentError("r and t must be positive");
    check_cap(graph, cap);
    ProfileTable table{graph.left_size(), graph.right_size(), graph.m(), {}, {}};
    for (auto & [key, count] : kernels::omp::profile_histogram(graph.shape())) {
        Count x = static_cast<unsigned long>(count);
        table.y.emplace(key, x * y_weight(r, t, graph.left_size(), graph.right_size(), key.i, key.j));
        table.x.emplace(key, std::move(x));
    }
    return table;
}

std::vector<std::vector<Count>> independent_pairs_by_size(const BipartiteGraph & graph, std::size_t cap)
{
    check_cap(graph, cap);
    std::vector<std::vector<Count>> result(graph.left_size() + 1, std::vector<Count>(graph.right_size() + 1, 0));
    for (auto & [key, count] : kernels::omp::profile_histogram(graph.shape()))
        if (key.c == 0)
            result[key.i][key.j] += static_cast<unsigned long>(count);
    return result;
}

} // namespace qreliab
