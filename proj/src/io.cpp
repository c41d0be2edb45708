#include "superdom/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace superdom {

namespace {

// Append `bits` (0/1 values, column-major triangle order) as 6-bit groups.
void pack_bits(std::string& out, const std::vector<int>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size()) group |= bits[i + j];
        }
        out.push_back((char)(group + 63));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.n;
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back((char)(((n >> shift) & 63) + 63));
    } else if (n <= (1LL << 36) - 1) {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back((char)(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 encoding");
    }
    std::vector<int> bits;
    bits.reserve((size_t)(n * (n - 1) / 2));
    for (Vertex j = 1; j < g.n; ++j)
        for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    pack_bits(out, bits);
    return out;
}

Graph graph6_decode(const std::string& line) {
    size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= line.size()) throw ParseError("graph6: truncated input");
        unsigned char c = (unsigned char)line[pos++];
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range at position " + std::to_string(pos - 1));
        return c - 63;
    };

    long long n;
    if (line.empty()) throw ParseError("graph6: empty input");
    if (line[0] != '~') {
        n = next_byte();
    } else if (line.size() >= 2 && line[1] != '~') {
        ++pos;  // skip '~'
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next_byte();
    } else {
        pos += 2;  // skip '~~'
        n = 0;
        for (int k = 0; k < 6; ++k) n = (n << 6) | next_byte();
    }
    if (n > 1000000) throw ParseError("graph6: order too large");

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if ((long long)(line.size() - pos) != nbytes)
        throw ParseError("graph6: body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(nbytes) + " for n=" + std::to_string(n));

    std::vector<Edge> edges;
    long long bit = 0;
    int group = 0, have = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                group = next_byte();
                have = 6;
            }
            if (group & (1 << (have - 1))) edges.emplace_back(i, j);
            --have;
        }
    // trailing padding bits must be zero
    if (have > 0 && (group & ((1 << have) - 1)))
        throw ParseError("graph6: non-zero padding bits");
    return build_graph((int)n, edges);
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph edge_list_decode(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts in header");
    std::vector<Edge> edges;
    edges.reserve((size_t)m);
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        edges.emplace_back((Vertex)u, (Vertex)v);
    }
    try {
        return build_graph((int)n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph edge_list_decode_string(const std::string& text) {
    std::istringstream in(text);
    return edge_list_decode(in);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = arr;
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("json graph: expected object with \"n\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("json graph: each edge must be a pair [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return build_graph(j["n"].get<int>(), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".g6")) {
        // first non-empty line
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) return graph6_decode(line);
        throw ParseError("graph6 file is empty: " + path);
    }
    if (ends_with(".json")) return graph_from_json(text);
    return edge_list_decode_string(text);
}

}  // namespace superdom
