#include "myclab/graph_io.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace myclab {

namespace {

void append_size(std::string& out, long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for the supported graph6 sizes");
    }
}

long parse_size(const std::string& s, size_t& pos) {
    auto sextet = [&](size_t i) -> long {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated at byte " + std::to_string(i));
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid byte at position " + std::to_string(i));
        return c - 63;
    };
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] != '~') {
        pos = 1;
        return sextet(0);
    }
    if (s.size() >= 2 && s[1] == '~') throw std::invalid_argument("graph6: 8-byte sizes not supported");
    pos = 4;
    return (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
}

}  // namespace

std::string to_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t pos = 0;
    long n = parse_size(s, pos);
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long expected_bytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) != expected_bytes)
        throw std::invalid_argument("graph6: wrong payload length at position " + std::to_string(pos) +
                                    " (expected " + std::to_string(expected_bytes) + " bytes)");
    long bit = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(s[pos + bit / 6]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: invalid byte at position " + std::to_string(pos + bit / 6));
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph JSON: need object with integer field \"n\"");
    Graph g(j["n"].get<int>());
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("graph JSON: each edge must be a pair [i,j]");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace myclab
