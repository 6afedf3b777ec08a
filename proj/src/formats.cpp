#include "oddhom/formats.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace oddhom {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxShort = 62;
constexpr int kG6MaxLong = 258047;

bool printable_g6_byte(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view line) {
    // trim trailing CR/LF
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(">>")) {
        if (!line.starts_with(header)) throw ParseError("graph6: unrecognized header");
        line.remove_prefix(header.size());
    }
    if (line.empty()) throw ParseError("graph6: empty line");

    size_t pos = 0;
    auto take = [&]() -> unsigned char {
        if (pos >= line.size()) throw ParseError("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (!printable_g6_byte(c))
            throw ParseError("graph6: invalid byte 0x" + [](unsigned char b) {
                static const char* hex = "0123456789abcdef";
                return std::string{hex[b >> 4], hex[b & 15]};
            }(c) + " at offset " + std::to_string(pos - 1));
        return c;
    };

    long long n = 0;
    unsigned char c0 = take();
    if (c0 < 126) {
        n = c0 - kG6Offset;
    } else {
        unsigned char c1 = take();
        if (c1 == 126) {
            // 36-bit form; accepted on input even though emit caps at the 18-bit form
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | (take() - kG6Offset);
        } else {
            n = c1 - kG6Offset;
            for (int i = 0; i < 2; ++i) n = (n << 6) | (take() - kG6Offset);
        }
    }
    if (n > 1'000'000) throw ParseError("graph6: vertex count " + std::to_string(n) + " beyond supported size");

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(line.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    int chunk = 0, chunk_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (chunk_bits == 0) {
                chunk = take() - kG6Offset;
                chunk_bits = 6;
            }
            if (chunk & (1 << (chunk_bits - 1))) edges.emplace_back(i, j);
            --chunk_bits;
            ++bit_index;
        }
    }
    // padding must be zero
    if (chunk_bits > 0 && (chunk & ((1 << chunk_bits) - 1)) != 0)
        throw ParseError("graph6: nonzero trailing padding bits");
    (void)bit_index;
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kG6MaxLong) throw std::invalid_argument("graph6: vertex count too large to encode");
    std::string out;
    if (n <= kG6MaxShort) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    int chunk = 0, chunk_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++chunk_bits == 6) {
                out.push_back(static_cast<char>(chunk + kG6Offset));
                chunk = 0;
                chunk_bits = 0;
            }
        }
    }
    if (chunk_bits > 0) {
        chunk <<= (6 - chunk_bits);
        out.push_back(static_cast<char>(chunk + kG6Offset));
    }
    return out;
}

GraphDocument parse_dimacs(std::string_view text, DimacsOptions options) {
    std::istringstream in{std::string(text)};
    std::string word;
    long long n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    long long duplicates = 0;
    std::string line;
    int line_no = 0;
    std::vector<std::vector<char>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (!(ls >> word)) continue;
        if (word == "c") continue;
        if (word == "p") {
            if (n >= 0) throw ParseError("dimacs: duplicate problem line at line " + std::to_string(line_no));
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || (kind != "edge" && kind != "col"))
                throw ParseError("dimacs: malformed problem line at line " + std::to_string(line_no));
            if (n < 0 || declared_m < 0) throw ParseError("dimacs: negative counts in problem line");
            seen.assign(static_cast<size_t>(n), {});
            continue;
        }
        if (word == "e") {
            if (n < 0) throw ParseError("dimacs: edge before problem line at line " + std::to_string(line_no));
            long long a, b;
            if (!(ls >> a >> b)) throw ParseError("dimacs: malformed edge at line " + std::to_string(line_no));
            if (a < 1 || a > n || b < 1 || b > n)
                throw ParseError("dimacs: vertex out of range at line " + std::to_string(line_no));
            if (a == b) throw ParseError("dimacs: loop at line " + std::to_string(line_no));
            int u = static_cast<int>(a - 1), v = static_cast<int>(b - 1);
            if (u > v) std::swap(u, v);
            auto& row = seen[static_cast<size_t>(u)];
            if (row.empty()) row.assign(static_cast<size_t>(n), 0);
            if (row[static_cast<size_t>(v)]) {
                if (options.strict) throw ParseError("dimacs: duplicate edge at line " + std::to_string(line_no));
                ++duplicates;
                continue;
            }
            row[static_cast<size_t>(v)] = 1;
            edges.emplace_back(u, v);
            continue;
        }
        throw ParseError("dimacs: unknown line type '" + word + "' at line " + std::to_string(line_no));
    }
    if (n < 0) throw ParseError("dimacs: missing problem line");
    if (options.strict && declared_m != static_cast<long long>(edges.size()) + duplicates)
        throw ParseError("dimacs: header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size() + duplicates));
    GraphDocument doc;
    doc.graph = Graph::from_edges(static_cast<int>(n), edges);
    if (duplicates > 0) doc.source = "dimacs: dropped " + std::to_string(duplicates) + " duplicate edge(s)";
    return doc;
}

std::string emit_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    return out;
}

GraphDocument parse_edgelist_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("json: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw ParseError("json: \"n\" must be an integer");
    long long n = j["n"].get<long long>();
    if (n < 0 || n > 1'000'000) throw ParseError("json: vertex count out of range");
    if (!j["edges"].is_array()) throw ParseError("json: \"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ParseError("json: each edge must be a pair of integers");
        long long a = item[0].get<long long>(), b = item[1].get<long long>();
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("json: edge endpoint out of range");
        if (a == b) throw ParseError("json: loop not allowed");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    GraphDocument doc;
    doc.graph = Graph::from_edges(static_cast<int>(n), edges);
    if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].get<std::string>();
    return doc;
}

std::string emit_edgelist_json(const Graph& g, const std::string& name) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (!name.empty()) j["name"] = name;
    return j.dump();
}

std::optional<Graph6Reader::Item> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        // skip blank lines
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (blank) continue;
        Item item;
        item.line_number = line_number_;
        try {
            item.graph = parse_graph6(line);
        } catch (const ParseError& e) {
            item.error = e.what();
        }
        return item;
    }
    return std::nullopt;
}

GraphFormat sniff_format(std::string_view text, std::string_view filename) {
    auto ends_with = [&](std::string_view suffix) {
        return filename.size() >= suffix.size() &&
               filename.substr(filename.size() - suffix.size()) == suffix;
    };
    if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
    if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
    if (ends_with(".json")) return GraphFormat::json;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return GraphFormat::json;
        if (c == 'p' || c == 'c') return GraphFormat::dimacs;
        return GraphFormat::graph6;
    }
    return GraphFormat::graph6;
}

GraphDocument parse_any(std::string_view text, std::string_view filename, DimacsOptions options) {
    switch (sniff_format(text, filename)) {
        case GraphFormat::dimacs:
            return parse_dimacs(text, options);
        case GraphFormat::json:
            return parse_edgelist_json(text);
        case GraphFormat::graph6:
        default: {
            // first non-empty line
            size_t start = 0;
            while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
            size_t end = text.find('\n', start);
            GraphDocument doc;
            doc.graph = parse_graph6(text.substr(start, end == std::string_view::npos ? end : end - start));
            return doc;
        }
    }
}

} // namespace oddhom
