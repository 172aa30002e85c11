#include "annigraph/threshold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "annigraph/group.hpp"

namespace annigraph {

std::string CreationSequence::str() const {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
    return out;
}

CreationSequence CreationSequence::from_string(std::string_view s) {
    CreationSequence out;
    out.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw Error(ErrorKind::ParseError, "creation sequence must be a 0/1 word");
        out.bits.push_back(c == '1');
    }
    return out;
}

std::optional<std::array<std::int64_t, 4>> find_alternating_4cycle(const SimpleGraph& g) {
    if (g.is_complete()) return std::nullopt;  // no non-edges, so no witness
    auto edges = g.edges();
    const std::size_t m = edges.size();
    for (std::size_t e1 = 0; e1 < m; ++e1) {
        auto [a, b] = edges[e1];
        for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
            auto [c, d] = edges[e2];
            if (c == a || c == b || d == a || d == b) continue;
            // Two matchings of the disjoint edge pair; check both.
            if (!g.has_edge(a, c) && !g.has_edge(b, d)) return std::array{a, b, c, d};
            if (!g.has_edge(a, d) && !g.has_edge(b, c)) return std::array{a, b, d, c};
        }
    }
    return std::nullopt;
}

CreationSequence peel_creation_sequence(const SimpleGraph& g) {
    const std::int64_t n = g.n();
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (std::int64_t v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<std::uint8_t> reversed;
    reversed.reserve(static_cast<std::size_t>(n));
    std::int64_t alive_count = n;
    while (alive_count > 1) {
        std::int64_t pick = -1;
        std::uint8_t bit = 0;
        for (std::int64_t v = 0; v < n && pick < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] == alive_count - 1) {
                pick = v;
                bit = 1;
            } else if (deg[static_cast<std::size_t>(v)] == 0) {
                pick = v;
                bit = 0;
            }
        }
        if (pick < 0)
            throw Error(ErrorKind::NotThreshold,
                        "no dominating or isolated vertex; the graph is not threshold");
        reversed.push_back(bit);
        alive[static_cast<std::size_t>(pick)] = 0;
        --alive_count;
        for (std::int64_t v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && g.has_edge(pick, v))
                --deg[static_cast<std::size_t>(v)];
    }
    if (alive_count == 1) reversed.push_back(0);  // the initial K1

    CreationSequence out;
    out.bits.assign(reversed.rbegin(), reversed.rend());
    return out;
}

SimpleGraph graph_from_creation_sequence(const CreationSequence& s) {
    const std::int64_t n = static_cast<std::int64_t>(s.bits.size());
    SimpleGraph g(n);
    for (std::int64_t v = 0; v < n; ++v)
        if (s.bits[static_cast<std::size_t>(v)])
            for (std::int64_t u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

namespace {

std::int64_t pow_i64(std::int64_t p, int e) {
    std::int64_t out = 1;
    for (int t = 0; t < e; ++t) {
        if (out > (std::int64_t{1} << 62) / p)
            throw Error(ErrorKind::GroupTooLarge, "p^alpha overflows 64-bit range");
        out *= p;
    }
    return out;
}

// |O_{alpha,p^i}| for i = 0..alpha (phi(p^alpha)/p^i, and 1 for i = alpha).
std::vector<std::int64_t> orbit_sizes(std::int64_t p, int alpha) {
    std::int64_t phi = pow_i64(p, alpha) - pow_i64(p, alpha - 1);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(alpha) + 1);
    for (int i = 0; i < alpha; ++i) sizes[static_cast<std::size_t>(i)] = phi / pow_i64(p, i);
    sizes[static_cast<std::size_t>(alpha)] = 1;
    return sizes;
}

void require_prime_power(std::int64_t p, int alpha) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeBase, "base must be prime");
    if (alpha < 1) throw Error(ErrorKind::InvalidGroup, "exponent must be >= 1");
    if (pow_i64(p, alpha) > (std::int64_t{1} << 26))
        throw Error(ErrorKind::GraphTooLarge, "p^alpha too large for an explicit word");
}

}  // namespace

CreationSequence closed_form_creation_sequence(std::int64_t p, int alpha) {
    require_prime_power(p, alpha);
    auto sizes = orbit_sizes(p, alpha);
    CreationSequence out;
    out.bits.reserve(static_cast<std::size_t>(pow_i64(p, alpha)));
    auto emit = [&](std::uint8_t bit, std::int64_t count) {
        out.bits.insert(out.bits.end(), static_cast<std::size_t>(count), bit);
    };
    if (alpha % 2 == 0) {
        // alpha = 2k: 0 1^(|O_k|-1) then pairs 0^|O_(k-m)| 1^|O_(k+m)|, then
        // 0^|O_0| and the dominating zero vertex.
        int k = alpha / 2;
        emit(0, 1);
        emit(1, sizes[static_cast<std::size_t>(k)] - 1);
        for (int m2 = 1; m2 <= k - 1; ++m2) {
            emit(0, sizes[static_cast<std::size_t>(k - m2)]);
            emit(1, sizes[static_cast<std::size_t>(k + m2)]);
        }
        emit(0, sizes[0]);
        emit(1, sizes[static_cast<std::size_t>(alpha)]);
    } else {
        // alpha = 2k-1: pairs 0^|O_(k-m)| 1^|O_(k+m-1)| for m = 1..k-1, then
        // 0^|O_0| and the dominating zero vertex.
        int k = (alpha + 1) / 2;
        for (int m2 = 1; m2 <= k - 1; ++m2) {
            emit(0, sizes[static_cast<std::size_t>(k - m2)]);
            emit(1, sizes[static_cast<std::size_t>(k + m2 - 1)]);
        }
        emit(0, sizes[0]);
        emit(1, sizes[static_cast<std::size_t>(alpha)]);
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> closed_form_degree_multiset(std::int64_t p,
                                                                               int alpha) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeBase, "base must be prime");
    if (alpha < 1) throw Error(ErrorKind::InvalidGroup, "exponent must be >= 1");
    auto sizes = orbit_sizes(p, alpha);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.emplace_back(pow_i64(p, alpha) - 1, 1);  // the zero vertex
    for (int i = alpha - 1; i >= 0; --i) {
        std::int64_t d = pow_i64(p, i) - (2 * i >= alpha ? 1 : 0);
        out.emplace_back(d, sizes[static_cast<std::size_t>(i)]);
    }
    // Decreasing degree order; adjacent equal degrees can appear for p = 2,
    // alpha <= 2, merge them.
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.first > b.first; });
    std::vector<std::pair<std::int64_t, std::int64_t>> merged;
    for (auto [d, c] : out) {
        if (!merged.empty() && merged.back().first == d)
            merged.back().second += c;
        else
            merged.emplace_back(d, c);
    }
    return merged;
}

std::vector<std::int64_t> laplacian_spectrum_threshold(const SimpleGraph& g) {
    if (auto witness = find_alternating_4cycle(g))
        throw Error(ErrorKind::NotThreshold, "graph has an alternating 4-cycle");
    IntPartition conj = conjugate(degree_sequence(g));
    std::vector<std::int64_t> out = conj.parts;
    out.resize(static_cast<std::size_t>(g.n()), 0);
    return out;
}

std::map<std::int64_t, std::int64_t> laplacian_multiplicity_table(std::int64_t p, int alpha) {
    auto degs = closed_form_degree_multiset(p, alpha);
    std::vector<std::int64_t> flat;
    for (auto [d, c] : degs)
        flat.insert(flat.end(), static_cast<std::size_t>(c), d);
    IntPartition conj = conjugate(IntPartition(std::move(flat)));
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t v : conj.parts) ++out[v];
    ++out[0];  // n values total; max degree is n-1, so exactly one zero pads
    return out;
}

std::string twin_collapse_signature(const SimpleGraph& g) {
    auto classes = twin_orbits(g);
    const int s = static_cast<int>(classes.size());
    std::vector<std::int64_t> vclass(static_cast<std::size_t>(g.n()));
    for (int c = 0; c < s; ++c)
        for (std::int64_t v : classes[static_cast<std::size_t>(c)])
            vclass[static_cast<std::size_t>(v)] = c;

    struct ClassRow {
        std::int64_t size;
        bool clique;
        std::vector<std::int64_t> adj_sizes;  // sizes of adjacent classes, sorted
    };
    std::vector<ClassRow> rows;
    for (int c = 0; c < s; ++c) {
        const auto& members = classes[static_cast<std::size_t>(c)];
        ClassRow row;
        row.size = static_cast<std::int64_t>(members.size());
        row.clique = members.size() >= 2 && g.has_edge(members[0], members[1]);
        for (int c2 = 0; c2 < s; ++c2) {
            if (c2 == c) continue;
            if (g.has_edge(members[0], classes[static_cast<std::size_t>(c2)][0]))
                row.adj_sizes.push_back(
                    static_cast<std::int64_t>(classes[static_cast<std::size_t>(c2)].size()));
        }
        std::sort(row.adj_sizes.begin(), row.adj_sizes.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
        return std::tie(a.size, a.clique, a.adj_sizes) < std::tie(b.size, b.clique, b.adj_sizes);
    });
    std::ostringstream out;
    for (const auto& row : rows) {
        out << row.size << (row.clique ? "K" : "I") << "[";
        for (std::size_t t = 0; t < row.adj_sizes.size(); ++t) {
            if (t) out << ",";
            out << row.adj_sizes[t];
        }
        out << "];";
    }
    return out.str();
}

}  // namespace annigraph
