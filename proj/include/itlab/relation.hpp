#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "address_space.hpp"
#include "projection.hpp"

namespace itlab {

using NodeSet = std::vector<int>; // strictly increasing node indices

struct FiniteRelation {
    std::vector<Word> labels;
    std::vector<std::vector<int>> adj;                // sorted out-neighbors
    std::vector<std::pair<double, double>> intervals; // embedded form only
    int nodes() const { return static_cast<int>(adj.size()); }
};

namespace detail {

inline void sort_unique(NodeSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline void check_nodes(const FiniteRelation& r, const NodeSet& C) {
    for (int x : C)
        if (x < 0 || x >= r.nodes()) throw config_error("node index out of range");
}

struct SccInfo {
    std::vector<int> comp; // node -> component id (reverse topological)
    int count = 0;
    std::vector<char> cyclic; // component contains a cycle
};

// Tarjan with an explicit stack.
inline SccInfo scc(const FiniteRelation& r) {
    const int n = r.nodes();
    SccInfo info;
    info.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int next = 0;

    for (int s0 = 0; s0 < n; ++s0) {
        if (index[s0] != -1) continue;
        index[s0] = low[s0] = next++;
        stack.push_back(s0);
        on_stack[s0] = 1;
        call.push_back({s0, 0});
        while (!call.empty()) {
            const int v = call.back().first;
            const std::size_t ci = call.back().second;
            if (ci < r.adj[v].size()) {
                ++call.back().second;
                const int w = r.adj[v][ci];
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    const int cid = info.count++;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        info.comp[w] = cid;
                    } while (w != v);
                }
                call.pop_back();
                if (!call.empty()) {
                    const int p = call.back().first;
                    low[p] = std::min(low[p], low[v]);
                }
            }
        }
    }

    std::vector<int> size(info.count, 0);
    for (int v = 0; v < n; ++v) ++size[info.comp[v]];
    info.cyclic.assign(info.count, 0);
    for (int v = 0; v < n; ++v) {
        if (size[info.comp[v]] > 1 ||
            std::binary_search(r.adj[v].begin(), r.adj[v].end(), v))
            info.cyclic[info.comp[v]] = 1;
    }
    return info;
}

} // namespace detail

inline NodeSet image(const FiniteRelation& r, const NodeSet& C) {
    detail::check_nodes(r, C);
    NodeSet out;
    for (int x : C) out.insert(out.end(), r.adj[x].begin(), r.adj[x].end());
    detail::sort_unique(out);
    return out;
}

inline FiniteRelation transpose(const FiniteRelation& r) {
    FiniteRelation t;
    t.labels = r.labels;
    t.intervals = r.intervals;
    t.adj.assign(r.nodes(), {});
    for (int x = 0; x < r.nodes(); ++x)
        for (int y : r.adj[x]) t.adj[y].push_back(x);
    return t; // sources arrive in ascending order
}

// Pairs (x, z) joined by (x, y) in r and (y, z) in s.
inline FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s) {
    if (r.nodes() != s.nodes()) throw config_error("compose: node counts differ");
    FiniteRelation out;
    out.labels = r.labels;
    out.adj.assign(r.nodes(), {});
    for (int x = 0; x < r.nodes(); ++x) {
        NodeSet acc;
        for (int y : r.adj[x]) acc.insert(acc.end(), s.adj[y].begin(), s.adj[y].end());
        detail::sort_unique(acc);
        out.adj[x] = std::move(acc);
    }
    return out;
}

inline FiniteRelation iterate(const FiniteRelation& r, int k) {
    if (k < 1) throw config_error("iterate exponent must be >= 1");
    FiniteRelation out = r;
    for (int i = 1; i < k; ++i) out = compose(r, out);
    return out;
}

inline NodeSet reach(const FiniteRelation& r, const NodeSet& C) {
    detail::check_nodes(r, C);
    std::vector<char> seen(r.nodes(), 0);
    NodeSet work;
    for (int x : C)
        if (!seen[x]) {
            seen[x] = 1;
            work.push_back(x);
        }
    while (!work.empty()) {
        const int v = work.back();
        work.pop_back();
        for (int w : r.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                work.push_back(w);
            }
    }
    NodeSet out;
    for (int v = 0; v < r.nodes(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

// Forward omega limit of C.  On a finite discrete space the tails of the
// forward orbit stabilize to: everything reachable from a cycle that C
// reaches (a node survives in all tails iff arbitrarily long paths from C
// run through it, and long paths must cross a reachable cycle).
inline NodeSet omega_limit(const FiniteRelation& r, const NodeSet& C) {
    const auto s = detail::scc(r);
    NodeSet core;
    for (int v : reach(r, C))
        if (s.cyclic[s.comp[v]]) core.push_back(v);
    return reach(r, core);
}

// Nodes through which some directed cycle passes.  Orientation-free:
// identical for r and its transpose.
inline NodeSet chain_recurrent(const FiniteRelation& r) {
    const auto s = detail::scc(r);
    NodeSet out;
    for (int v = 0; v < r.nodes(); ++v)
        if (s.cyclic[s.comp[v]]) out.push_back(v);
    return out;
}

inline std::vector<NodeSet> transitive_components(const FiniteRelation& r) {
    const auto s = detail::scc(r);
    std::vector<NodeSet> byid(s.count);
    for (int v = 0; v < r.nodes(); ++v) byid[s.comp[v]].push_back(v);
    std::vector<NodeSet> out;
    for (int c = 0; c < s.count; ++c)
        if (s.cyclic[c]) out.push_back(std::move(byid[c]));
    std::sort(out.begin(), out.end(),
              [](const NodeSet& u, const NodeSet& v) { return u.front() < v.front(); });
    return out;
}

// Basin of an image-invariant set A, and the dual repeller (complement of
// the basin).  A point is attracted iff it cannot reach a cycle that
// leaves A; invariance of A makes everything downstream of an in-A cycle
// stay in A, so the dual is the backward reach of the "bad" cycles.
inline std::pair<NodeSet, NodeSet> basin_and_dual(const FiniteRelation& r,
                                                  const NodeSet& A) {
    detail::check_nodes(r, A);
    if (image(r, A) != A)
        throw config_error("basin_and_dual: set is not image-invariant");

    const auto s = detail::scc(r);
    std::vector<char> in_a(r.nodes(), 0);
    for (int x : A) in_a[x] = 1;
    std::vector<char> allin(s.count, 1);
    for (int v = 0; v < r.nodes(); ++v)
        if (!in_a[v]) allin[s.comp[v]] = 0;

    NodeSet bad;
    for (int v = 0; v < r.nodes(); ++v)
        if (s.cyclic[s.comp[v]] && !allin[s.comp[v]]) bad.push_back(v);

    const FiniteRelation rt = transpose(r);
    NodeSet dual = reach(rt, bad);
    NodeSet basin;
    basin.reserve(r.nodes() - dual.size());
    std::size_t j = 0;
    for (int v = 0; v < r.nodes(); ++v) {
        if (j < dual.size() && dual[j] == v) ++j;
        else basin.push_back(v);
    }
    if (omega_limit(rt, dual) != dual)
        throw solve_error("dual repeller failed its backward-limit identity");
    return {std::move(basin), std::move(dual)};
}

inline Word word_of_index(long long v, int k) {
    std::string s(static_cast<std::size_t>(k), '0');
    for (int i = k - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<char>('0' + (v & 1));
        v >>= 1;
    }
    return Word(std::move(s));
}

// The depth-k transition structure on binary words (node index = binary
// value): an edge x -> y means y = j x_0...x_{k-2} for a digit j, kept iff
// y itself obeys the critical cut, checked on its tail against alpha|k-1
// resp. beta|k-1.  In this orientation the surviving address space is the
// maximal attractor; the shift acts along the transpose.
inline FiniteRelation build_itinerary_relation(const CriticalPair& crit, int k) {
    if (k < 1) throw config_error("relation depth must be >= 1");
    if (k > 24) throw config_error("relation depth capped at 24");
    if (crit.depth() < k - 1 || crit.reliable() < k - 1)
        throw solve_error("critical itineraries too shallow or unreliable");

    const int n = 1 << k;
    FiniteRelation r;
    r.adj.assign(n, {});
    r.labels.reserve(n);
    for (int v = 0; v < n; ++v) r.labels.push_back(word_of_index(v, k));

    const Word ak = crit.alpha.word.prefix(static_cast<std::size_t>(k - 1));
    const Word bk = crit.beta.word.prefix(static_cast<std::size_t>(k - 1));
    const int mask = (1 << (k - 1)) - 1;
    for (int y = 0; y < n; ++y) {
        const int j = y >> (k - 1);
        const int t = y & mask;
        const Word tw = word_of_index(t, k - 1);
        const bool pass = (j == 0) ? leq(lex_compare(tw, ak)) : geq(lex_compare(tw, bk));
        if (!pass) continue;
        r.adj[2 * t].push_back(y);
        r.adj[2 * t + 1].push_back(y);
    }
    return r; // targets arrive in ascending order per source
}

// Same relation with each node tagged by its dyadic cell under the
// binary-expansion coding.
inline FiniteRelation build_embedded_relation(const CriticalPair& crit, int k) {
    FiniteRelation r = build_itinerary_relation(crit, k);
    r.intervals.reserve(static_cast<std::size_t>(r.nodes()));
    for (const Word& w : r.labels) {
        const auto cell = coding_pi<double>(w);
        r.intervals.emplace_back(cell.lo, cell.hi);
    }
    return r;
}

struct ConleyReport {
    NodeSet maximal_attractor; // forward omega limit of everything
    NodeSet chain_recurrent;
    std::vector<NodeSet> transitive_components;
    NodeSet attractor; // backward omega limit away from the fixed words
    NodeSet basin;
    NodeSet dual_repeller;
    NodeSet connecting; // neither attracted-to nor repelled-from set
};

inline ConleyReport conley_report(const FiniteRelation& r) {
    const int n = r.nodes();
    NodeSet X(static_cast<std::size_t>(n));
    std::iota(X.begin(), X.end(), 0);

    ConleyReport rep;
    rep.maximal_attractor = omega_limit(r, X);
    rep.chain_recurrent = chain_recurrent(r);
    rep.transitive_components = transitive_components(r);

    const FiniteRelation rt = transpose(r);
    NodeSet inner;
    for (int v = 1; v + 1 < n; ++v) inner.push_back(v);
    rep.attractor = omega_limit(rt, inner);
    auto [basin, dual] = basin_and_dual(rt, rep.attractor);
    rep.basin = std::move(basin);
    rep.dual_repeller = std::move(dual);
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(rep.attractor.begin(), rep.attractor.end(), v) &&
            !std::binary_search(rep.dual_repeller.begin(), rep.dual_repeller.end(), v))
            rep.connecting.push_back(v);
    return rep;
}

} // namespace itlab
