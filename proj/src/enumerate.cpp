#include "hadwiger/enumerate.hpp"

#include "hadwiger/error.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace hadwiger {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void require_canonical_order(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error(Errc::too_large, "canonical codes support at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
}

// Places vertices position by position; column j of the code only depends on
// positions 0..j, so a prefix larger than the best prefix is cut immediately.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), bits_(pair_count(n_)) {}

    std::uint64_t run()
    {
        best_ = ~std::uint64_t{0};
        have_best_ = false;
        place(0, 0, g_.vertices());
        return have_best_ ? best_ : 0;
    }

    const std::array<int, kMaxCanonicalOrder>& best_permutation() const { return best_perm_; }

private:
    // `prefix` holds the first pair_count(pos) bits of the code, right-aligned.
    void place(int pos, std::uint64_t prefix, VertexSet unused)
    {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        for (int v : unused) {
            std::uint64_t extended = prefix;
            for (int i = 0; i < pos; ++i)
                extended = (extended << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
            if (have_best_) {
                const int shift = bits_ - pair_count(pos + 1);
                const std::uint64_t best_prefix = shift >= 64 ? 0 : best_ >> shift;
                if (extended > best_prefix)
                    continue;
            }
            perm_[pos] = v;
            VertexSet rest = unused;
            rest.erase(v);
            place(pos + 1, extended, rest);
        }
    }

    const Graph& g_;
    int n_;
    int bits_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
    std::array<int, kMaxCanonicalOrder> perm_{};
    std::array<int, kMaxCanonicalOrder> best_perm_{};
};

} // namespace

std::uint64_t adjacency_code(const Graph& g)
{
    require_canonical_order(g);
    std::uint64_t code = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
    return code;
}

std::uint64_t canonical_code(const Graph& g)
{
    require_canonical_order(g);
    return Canonizer(g).run();
}

Graph canonical_form(const Graph& g)
{
    require_canonical_order(g);
    Canonizer c(g);
    c.run();
    const auto& perm = c.best_permutation();
    std::vector<int> position(static_cast<std::size_t>(g.order()));
    for (int p = 0; p < g.order(); ++p)
        position[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]});
    return Graph::from_edge_list(g.order(), edges);
}

Graph graph_from_code(int n, std::uint64_t code)
{
    if (n > kMaxCanonicalOrder)
        throw Error(Errc::too_large, "canonical codes support at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
    std::vector<Edge> edges;
    int bit = pair_count(n) - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1U)
                edges.push_back({i, j});
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> enumerate_graphs(int n)
{
    if (n < 0)
        throw Error(Errc::bad_parameter, "negative order");
    if (n > kMaxEnumerationOrder)
        throw Error(Errc::too_large, "exhaustive enumeration is capped at n = 7; supply a graph6 file instead");

    // Every graph on m vertices is (up to isomorphism) a graph on m-1 vertices
    // plus one new vertex, so extending each class representative by every
    // possible neighborhood reaches all classes.
    std::vector<std::uint64_t> codes{0};
    for (int m = 1; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : codes) {
            const Graph base = graph_from_code(m - 1, code);
            const auto base_edges = base.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                std::vector<Edge> edges = base_edges;
                for (int v : VertexSet(mask))
                    edges.push_back({v, m - 1});
                next.insert(canonical_code(Graph::from_edge_list(m, edges)));
            }
        }
        codes.assign(next.begin(), next.end());
    }

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes)
        out.push_back(graph_from_code(n, code));
    return out;
}

} // namespace hadwiger
