#include "anet/puzzle.hpp"

#include <algorithm>
#include <deque>

namespace anet::puzzle {

SimpleGraph SimpleGraph::empty(int n)
{
    if (n < 1) fail(errc::invalid_params, "graph needs at least one vertex");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), {});
    return g;
}

void SimpleGraph::add_edge(int a, int b)
{
    if (a == b) fail(errc::invalid_params, "self-loops are not allowed in a simple graph");
    if (a < 0 || b < 0 || a >= n || b >= n) fail(errc::invalid_params, "edge endpoint out of range");
    auto& la = adj[static_cast<std::size_t>(a)];
    if (std::find(la.begin(), la.end(), b) != la.end()) return;
    la.insert(std::lower_bound(la.begin(), la.end(), b), b);
    auto& lb = adj[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
}

bool SimpleGraph::has_edge(int a, int b) const
{
    const auto& la = adj[static_cast<std::size_t>(a)];
    return std::binary_search(la.begin(), la.end(), b);
}

std::size_t SimpleGraph::edge_count() const
{
    std::size_t c = 0;
    for (const auto& l : adj) c += l.size();
    return c / 2;
}

namespace {

int component_size(const SimpleGraph& g, int start, int skip)
{
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    seen[static_cast<std::size_t>(start)] = true;
    std::deque<int> queue{start};
    int count = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (v == skip || seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = true;
            ++count;
            queue.push_back(v);
        }
    }
    return count;
}

} // namespace

bool SimpleGraph::connected() const
{
    if (n == 1) return true;
    return component_size(*this, 0, -1) == n;
}

bool SimpleGraph::two_connected() const
{
    if (n < 3) return false;
    if (!connected()) return false;
    for (int skip = 0; skip < n; ++skip) {
        const int start = skip == 0 ? 1 : 0;
        if (component_size(*this, start, skip) != n - 1) return false;
    }
    return true;
}

bool SimpleGraph::bipartite() const
{
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] < 0) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool SimpleGraph::is_cycle() const
{
    if (n < 3 || !connected()) return false;
    for (int v = 0; v < n; ++v)
        if (degree(v) != 2) return false;
    return true;
}

SimpleGraph hamming_graph(int n, int q, std::uint64_t vertex_cap)
{
    const Params p = Params::make(n, q, vertex_cap);
    SimpleGraph g = SimpleGraph::empty(static_cast<int>(p.size));
    for (Config x = 0; x < p.size; ++x)
        for (int v = 1; v <= n; ++v) {
            const int dx = p.digit(x, v);
            for (int e = dx + 1; e < q; ++e) g.add_edge(static_cast<int>(x), static_cast<int>(x + static_cast<Config>(e - dx) * p.place(v)));
        }
    return g;
}

SimpleGraph cycle_graph(int k)
{
    if (k < 3) fail(errc::invalid_params, "cycle needs at least 3 vertices");
    SimpleGraph g = SimpleGraph::empty(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

std::uint64_t encode_state(const PuzzleState& s)
{
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int t = s[i] < 0 ? 15 : s[i];
        code |= static_cast<std::uint64_t>(t) << (4 * i);
    }
    return code;
}

bool PuzzleGroup::contains(const PuzzleState& s) const
{
    if (static_cast<int>(s.size()) != n) return false;
    return elements.contains(encode_state(s));
}

PuzzleGroup puzzle_group(const SimpleGraph& d, int hole, std::uint64_t state_cap)
{
    if (d.n > 15) fail(errc::state_cap_exceeded, "puzzle state encoding supports at most 15 vertices");
    if (hole < 0 || hole >= d.n) fail(errc::invalid_params, "hole vertex out of range");
    if (!d.connected()) fail(errc::invalid_params, "puzzle graph must be connected");

    PuzzleGroup g;
    g.n = d.n;
    g.hole = hole;

    PuzzleState start(static_cast<std::size_t>(d.n));
    for (int v = 0; v < d.n; ++v) start[static_cast<std::size_t>(v)] = v;
    start[static_cast<std::size_t>(hole)] = -1;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(1u << 20);
    std::deque<std::pair<PuzzleState, int>> queue; // (placement, hole position)
    seen.insert(encode_state(start));
    queue.emplace_back(start, hole);
    g.elements.insert(encode_state(start));

    while (!queue.empty()) {
        auto [state, h] = std::move(queue.front());
        queue.pop_front();
        for (int u : d.adj[static_cast<std::size_t>(h)]) {
            PuzzleState next = state;
            next[static_cast<std::size_t>(h)] = next[static_cast<std::size_t>(u)];
            next[static_cast<std::size_t>(u)] = -1;
            const std::uint64_t code = encode_state(next);
            if (seen.insert(code).second) {
                if (seen.size() > state_cap) fail(errc::state_cap_exceeded, "puzzle state space exceeds the cap");
                if (u == hole) g.elements.insert(code);
                queue.emplace_back(std::move(next), u);
            }
        }
    }
    g.states_explored = seen.size();
    g.order = g.elements.size();
    return g;
}

const char* wilson_class_name(WilsonClass c)
{
    switch (c) {
    case WilsonClass::Trivial: return "Trivial";
    case WilsonClass::Sym: return "Sym";
    case WilsonClass::Alt: return "Alt";
    case WilsonClass::OutOfScope: return "OutOfScope";
    }
    return "?";
}

WilsonClass wilson_predict(const SimpleGraph& d)
{
    if (!d.two_connected()) return WilsonClass::OutOfScope;
    if (d.is_cycle()) return WilsonClass::Trivial;
    if (d.bipartite()) return WilsonClass::Alt;
    if (d.n >= 8) return WilsonClass::Sym;
    return WilsonClass::OutOfScope; // small non-bipartite non-cycles (theta-0 territory)
}

std::optional<std::uint64_t> wilson_predicted_order(const SimpleGraph& d)
{
    const auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (wilson_predict(d)) {
    case WilsonClass::Trivial: return 1;
    case WilsonClass::Sym: return factorial(d.n - 1);
    case WilsonClass::Alt: return factorial(d.n - 1) / 2;
    case WilsonClass::OutOfScope: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace anet::puzzle
