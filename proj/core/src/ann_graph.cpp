#include "annigraph/ann_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace annigraph {

namespace {

bool product_annihilates(std::int64_t da, std::int64_t db, std::int64_t exp_g) {
    return static_cast<__int128>(da) * db % exp_g == 0;
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<DynBitset> rows)
    : n_(static_cast<std::int64_t>(rows.size())), rows_(std::move(rows)) {
    for (std::int64_t v = 0; v < n_; ++v) {
        if (rows_[static_cast<std::size_t>(v)].size() != static_cast<std::size_t>(n_) ||
            rows_[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(v)))
            throw Error(ErrorKind::InvalidGroup, "adjacency rows must be n-bit with zero diagonal");
    }
}

std::int64_t SimpleGraph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::int64_t>(r.count());
    return twice / 2;
}

std::vector<std::pair<std::int64_t, std::int64_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (std::int64_t u = 0; u < n_; ++u)
        for (std::int64_t v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

IntPartition degree_sequence(const SimpleGraph& g) {
    std::vector<std::int64_t> deg;
    deg.reserve(static_cast<std::size_t>(g.n()));
    for (std::int64_t v = 0; v < g.n(); ++v) {
        std::int64_t d = g.degree(v);
        if (d > 0) deg.push_back(d);
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return IntPartition(std::move(deg));
}

std::vector<std::vector<std::int64_t>> twin_orbits(const SimpleGraph& g) {
    const std::int64_t n = g.n();
    std::vector<std::int64_t> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int64_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    // u, v are twins iff N(u) = N(v) (non-adjacent) or N[u] = N[v] (adjacent).
    // Group by open rows and by closed rows; sorting indices by row content
    // finds both kinds without the quadratic pair scan.
    auto group_equal_rows = [&](bool closed) {
        std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        auto key_words = [&](std::int64_t v) {
            std::vector<std::uint64_t> w = g.row(v).words();
            if (closed) w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
            return w;
        };
        std::vector<std::vector<std::uint64_t>> keys(static_cast<std::size_t>(n));
        for (std::int64_t v = 0; v < n; ++v) keys[static_cast<std::size_t>(v)] = key_words(v);
        std::sort(idx.begin(), idx.end(), [&](std::int64_t a, std::int64_t b) {
            return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
        });
        for (std::int64_t t = 1; t < n; ++t) {
            if (keys[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])] ==
                keys[static_cast<std::size_t>(idx[static_cast<std::size_t>(t - 1)])])
                unite(idx[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>(t - 1)]);
        }
    };
    group_equal_rows(false);
    group_equal_rows(true);

    std::map<std::int64_t, std::vector<std::int64_t>> classes;
    for (std::int64_t v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(classes.size());
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

AnnGraph build_graph(const FiniteAbelianGroup& g, std::int64_t max_vertices) {
    const std::int64_t n = g.order();
    if (n > max_vertices)
        throw Error(ErrorKind::GraphTooLarge, "group order " + std::to_string(n) +
                                                  " exceeds the vertex cap " +
                                                  std::to_string(max_vertices));

    std::vector<std::int64_t> gen(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v)
        gen[static_cast<std::size_t>(v)] = annihilator(g.element(v), std::max(n, kDefaultOracleCap)).generator;

    // Group vertices by their ideal generator; adjacency only depends on the
    // pair of generators, so build one mask per generator class.
    std::map<std::int64_t, DynBitset> class_mask;
    for (std::int64_t v = 0; v < n; ++v) {
        auto [it, fresh] = class_mask.try_emplace(gen[static_cast<std::size_t>(v)],
                                                  DynBitset(static_cast<std::size_t>(n)));
        it->second.set(static_cast<std::size_t>(v));
    }

    const std::int64_t exp_g = g.exponent();
    std::vector<DynBitset> rows(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n)));
    std::map<std::int64_t, DynBitset> row_for_gen;
    for (const auto& [d, mask] : class_mask) {
        DynBitset acc(static_cast<std::size_t>(n));
        for (const auto& [d2, mask2] : class_mask)
            if (product_annihilates(d, d2, exp_g)) acc.or_with(mask2);
        row_for_gen.emplace(d, std::move(acc));
    }
    for (std::int64_t v = 0; v < n; ++v) {
        DynBitset row = row_for_gen.at(gen[static_cast<std::size_t>(v)]);
        row.reset(static_cast<std::size_t>(v));
        rows[static_cast<std::size_t>(v)] = std::move(row);
    }

    return AnnGraph{g, SimpleGraph(std::move(rows)), std::move(gen)};
}

std::vector<Orbit> cyclic_orbits(const FiniteAbelianGroup& g) {
    if (!g.is_cyclic_p_group())
        throw Error(ErrorKind::WrongGroupKind, "orbit decomposition needs a cyclic p-group");
    const auto& view = *g.p_group_view();
    int alpha = view.factor_exponents[0];
    std::vector<Orbit> orbits(static_cast<std::size_t>(alpha) + 1);
    for (int i = 0; i <= alpha; ++i) {
        orbits[static_cast<std::size_t>(i)].alpha = alpha;
        orbits[static_cast<std::size_t>(i)].i = i;
    }
    for (std::int64_t x = 0; x < g.order(); ++x) {
        int i = residue_valuation(x, view.prime, alpha);
        orbits[static_cast<std::size_t>(i)].members.push_back(x);
    }
    return orbits;
}

QuotientGraph quotient(const AnnGraph& g) {
    if (!g.group.is_cyclic_p_group())
        throw Error(ErrorKind::WrongGroupKind, "equitable quotient needs a cyclic p-group");
    auto orbits = cyclic_orbits(g.group);
    const int s = static_cast<int>(orbits.size());  // alpha + 1 parts

    QuotientGraph q;
    q.parts.resize(static_cast<std::size_t>(s));
    q.sizes.resize(static_cast<std::size_t>(s));
    std::vector<DynBitset> part_mask(static_cast<std::size_t>(s),
                                     DynBitset(static_cast<std::size_t>(g.graph.n())));
    for (int i = 1; i <= s; ++i) {
        // V_i = O_{alpha, p^(alpha+1-i)}; orbits[] is indexed by valuation.
        const Orbit& orb = orbits[static_cast<std::size_t>(s - i)];
        q.parts[static_cast<std::size_t>(i - 1)] = orb.members;
        q.sizes[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(orb.members.size());
        for (std::int64_t v : orb.members) part_mask[static_cast<std::size_t>(i - 1)].set(static_cast<std::size_t>(v));
    }

    q.m.assign(static_cast<std::size_t>(s), std::vector<std::int64_t>(static_cast<std::size_t>(s), 0));
    for (int i = 0; i < s; ++i) {
        bool first = true;
        for (std::int64_t u : q.parts[static_cast<std::size_t>(i)]) {
            std::vector<std::int64_t> row(static_cast<std::size_t>(s));
            for (int j = 0; j < s; ++j)
                row[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(
                    g.graph.row(u).and_count(part_mask[static_cast<std::size_t>(j)]));
            if (first) {
                q.m[static_cast<std::size_t>(i)] = row;
                first = false;
            } else if (row != q.m[static_cast<std::size_t>(i)]) {
                throw Error(ErrorKind::EquitabilityViolated,
                            "orbit partition is not equitable at vertex " + std::to_string(u));
            }
        }
    }
    return q;
}

QuotientGraph quotient(const FiniteAbelianGroup& g, std::int64_t max_vertices) {
    return quotient(build_graph(g, max_vertices));
}

GraphMetrics metrics(const AnnGraph& ag) {
    const SimpleGraph& g = ag.graph;
    const std::int64_t n = g.n();
    GraphMetrics out;

    // Eccentricity of the identity vertex by BFS.
    {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<std::int64_t> bfs;
        dist[0] = 0;
        bfs.push(0);
        int ecc = 0;
        while (!bfs.empty()) {
            std::int64_t u = bfs.front();
            bfs.pop();
            for (std::int64_t v = 0; v < n; ++v) {
                if (g.has_edge(u, v) && dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
                    bfs.push(v);
                }
            }
        }
        out.eccentricity_of_zero = ecc;
    }

    // Vertex 0 dominates, so every distance is at most 2: the diameter is 1
    // exactly for complete graphs (and 0 for a single vertex).
    if (n <= 1)
        out.diameter = 0;
    else
        out.diameter = g.is_complete() ? 1 : 2;

    out.girth = girth(g);
    return out;
}

std::optional<std::int64_t> girth(const SimpleGraph& g) {
    const std::int64_t n = g.n();
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) && g.row(u).intersects(g.row(v))) return 3;

    // Triangle-free: shortest cycle through each root via BFS.
    std::optional<std::int64_t> best;
    for (std::int64_t s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<std::int64_t> par(static_cast<std::size_t>(n), -1);
        std::queue<std::int64_t> bfs;
        dist[static_cast<std::size_t>(s)] = 0;
        bfs.push(s);
        while (!bfs.empty()) {
            std::int64_t u = bfs.front();
            bfs.pop();
            for (std::int64_t v = 0; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    par[static_cast<std::size_t>(v)] = u;
                    bfs.push(v);
                } else if (v != par[static_cast<std::size_t>(u)]) {
                    std::int64_t len = dist[static_cast<std::size_t>(u)] +
                                       dist[static_cast<std::size_t>(v)] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

std::vector<std::vector<std::int64_t>> twin_orbits(const AnnGraph& g) {
    return twin_orbits(g.graph);
}

}  // namespace annigraph
