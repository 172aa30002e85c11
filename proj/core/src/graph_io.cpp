#include "annigraph/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace annigraph {

namespace {

// graph6 packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... into
// 6-bit groups, each printed as chr(value + 63).
void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t base = 0; base < bits.size(); base += 6) {
        int v = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            v <<= 1;
            if (base + k < bits.size() && bits[base + k]) v |= 1;
        }
        out.push_back(static_cast<char>(v + 63));
    }
}

std::string to_graph6(const SimpleGraph& g) {
    const std::int64_t n = g.n();
    if (n > 258047)
        throw Error(ErrorKind::GraphTooLarge, "graph6 encoder supports n <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::int64_t j = 1; j < n; ++j)
        for (std::int64_t i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_sextets(out, bits);
    return out;
}

SimpleGraph from_graph6(const std::string& data) {
    if (data.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");
    std::size_t pos = 0;
    std::int64_t n = 0;
    if (data[0] == '~') {
        if (data.size() < 4 || data[1] == '~')
            throw Error(ErrorKind::ParseError, "unsupported graph6 size header");
        n = (static_cast<std::int64_t>(data[1] - 63) << 12) |
            (static_cast<std::int64_t>(data[2] - 63) << 6) |
            static_cast<std::int64_t>(data[3] - 63);
        pos = 4;
    } else {
        n = data[0] - 63;
        pos = 1;
    }
    if (n < 0) throw Error(ErrorKind::ParseError, "bad graph6 vertex count");
    SimpleGraph g(n);
    std::int64_t bit = 0;
    for (std::int64_t j = 1; j < n; ++j) {
        for (std::int64_t i = 0; i < j; ++i, ++bit) {
            std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            if (byte >= data.size()) throw Error(ErrorKind::ParseError, "truncated graph6 payload");
            int v = data[byte] - 63;
            if (v < 0 || v > 63) throw Error(ErrorKind::ParseError, "bad graph6 byte");
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph annigraph {\n";
    for (std::int64_t v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (!labels.empty()) out << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// Parses the DOT shape emitted above: one vertex or edge statement per line.
SimpleGraph from_dot(const std::string& data) {
    std::istringstream in(data);
    std::string line;
    std::int64_t maxv = -1;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos) continue;
        if (!std::isdigit(static_cast<unsigned char>(line[i]))) continue;
        std::size_t used = 0;
        std::int64_t u = std::stoll(line.substr(i), &used);
        maxv = std::max(maxv, u);
        std::size_t rest = line.find("--", i + used);
        if (rest != std::string::npos) {
            std::int64_t v = std::stoll(line.substr(rest + 2));
            maxv = std::max(maxv, v);
            edges.emplace_back(u, v);
        }
    }
    SimpleGraph g(maxv + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string to_edge_list_json(const SimpleGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "{\"n\": " << g.n() << ", \"edges\": [";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out << ", ";
        out << "[" << u << ", " << v << "]";
        first = false;
    }
    out << "], \"labels\": [";
    for (std::int64_t v = 0; v < g.n(); ++v) {
        if (v) out << ", ";
        out << '"' << (labels.empty() ? std::to_string(v) : json_escape(labels[static_cast<std::size_t>(v)]))
            << '"';
    }
    out << "]}\n";
    return out.str();
}

// Minimal reader for the JSON shape above; only n and edges matter.
SimpleGraph from_edge_list_json(const std::string& data) {
    auto find_number = [&](const char* key) -> std::int64_t {
        std::size_t k = data.find(key);
        if (k == std::string::npos) throw Error(ErrorKind::ParseError, "edge-list JSON missing key");
        k = data.find(':', k);
        return std::stoll(data.substr(k + 1));
    };
    std::int64_t n = find_number("\"n\"");
    SimpleGraph g(n);
    std::size_t k = data.find("\"edges\"");
    if (k == std::string::npos) throw Error(ErrorKind::ParseError, "edge-list JSON missing edges");
    k = data.find('[', k);
    std::size_t end = data.find(']', k);
    // Scan pairs "[u, v]" inside the edges array.
    std::size_t pos = k + 1;
    while (true) {
        std::size_t open = data.find('[', pos);
        if (open == std::string::npos || open > data.find("\"labels\"", k)) break;
        std::size_t comma = data.find(',', open);
        std::size_t close = data.find(']', open);
        if (comma == std::string::npos || close == std::string::npos || comma > close) break;
        std::int64_t u = std::stoll(data.substr(open + 1, comma - open - 1));
        std::int64_t v = std::stoll(data.substr(comma + 1, close - comma - 1));
        g.add_edge(u, v);
        pos = close + 1;
        end = std::max(end, close);
    }
    return g;
}

}  // namespace

GraphFormat graph_format_from_string(const std::string& name) {
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json" || name == "edge-list-json") return GraphFormat::EdgeListJson;
    throw Error(ErrorKind::UnsupportedFormat, "unknown graph format '" + name + "'");
}

std::string export_graph(const SimpleGraph& g, GraphFormat format,
                         const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.n()))
        throw Error(ErrorKind::UnsupportedFormat, "label count must match vertex count");
    switch (format) {
        case GraphFormat::Graph6: return to_graph6(g);
        case GraphFormat::Dot: return to_dot(g, labels);
        case GraphFormat::EdgeListJson: return to_edge_list_json(g, labels);
    }
    throw Error(ErrorKind::UnsupportedFormat, "unknown graph format");
}

SimpleGraph import_graph(const std::string& data, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return from_graph6(data);
        case GraphFormat::Dot: return from_dot(data);
        case GraphFormat::EdgeListJson: return from_edge_list_json(data);
    }
    throw Error(ErrorKind::UnsupportedFormat, "unknown graph format");
}

std::string element_label(const FiniteAbelianGroup& g, std::int64_t index) {
    auto coords = g.coords_of(index);
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    out += ")";
    return out;
}

std::vector<std::string> vertex_labels(const FiniteAbelianGroup& g) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (std::int64_t v = 0; v < g.order(); ++v) out.push_back(element_label(g, v));
    return out;
}

}  // namespace annigraph
