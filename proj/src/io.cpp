#include <entropygraph/io.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include <entropygraph/errors.hpp>

namespace entropygraph::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        out.push_back(trim(text.substr(pos, end - pos)));
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto b = line.find_first_not_of(" \t", pos);
        if (b == std::string_view::npos)
            break;
        auto e = line.find_first_of(" \t", b);
        if (e == std::string_view::npos)
            e = line.size();
        out.push_back(line.substr(b, e - b));
        pos = e;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
        throw ValidationError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(tok) + "'");
    return v;
}

double to_double(std::string_view tok, std::size_t line) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
        throw ValidationError("line " + std::to_string(line) + ": expected a number, got '" + std::string(tok) + "'");
    return v;
}

// "#bipartite n1 n2" or "#vertices n"; anything else after '#' is a comment.
bool parse_header(std::string_view line, std::size_t ln, std::optional<std::pair<int, int>>& bip,
                  std::optional<int>& vertices) {
    const auto toks = split_ws(trim(line.substr(1)));
    if (toks.empty())
        return false;
    if (toks[0] == "bipartite") {
        if (toks.size() != 3)
            throw ValidationError("line " + std::to_string(ln) + ": header is '#bipartite n1 n2'");
        const auto n1 = to_int(toks[1], ln), n2 = to_int(toks[2], ln);
        if (n1 < 0 || n2 < 0)
            throw ValidationError("negative part size");
        bip = std::pair<int, int>{static_cast<int>(n1), static_cast<int>(n2)};
        return true;
    }
    if (toks[0] == "vertices") {
        if (toks.size() != 2)
            throw ValidationError("line " + std::to_string(ln) + ": header is '#vertices n'");
        const auto n = to_int(toks[1], ln);
        if (n < 0)
            throw ValidationError("negative vertex count");
        vertices = static_cast<int>(n);
        return true;
    }
    return false;
}

} // namespace

std::vector<int> parse_degrees(std::string_view text) {
    std::vector<int> out;
    const auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        if (line.empty() || line.front() == '#')
            continue;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            const auto end = comma == std::string_view::npos ? line.size() : comma;
            const auto v = to_int(line.substr(pos, end - pos), i + 1);
            if (v < 0)
                throw ValidationError("line " + std::to_string(i + 1) + ": negative degree");
            out.push_back(static_cast<int>(v));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    if (out.empty())
        throw ValidationError("no degrees found");
    return out;
}

std::vector<int> read_degrees(const std::filesystem::path& path) {
    return parse_degrees(read_file(path));
}

EdgeListFile parse_edge_list(std::string_view text) {
    std::optional<std::pair<int, int>> bip;
    std::optional<int> vertices;
    std::vector<Edge> edges;
    int max_label = 0;
    const auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        if (line.empty())
            continue;
        if (line.front() == '#') {
            parse_header(line, i + 1, bip, vertices);
            continue;
        }
        const auto toks = split_ws(line);
        if (toks.size() != 2)
            throw ValidationError("line " + std::to_string(i + 1) + ": expected 'u v'");
        const auto u = to_int(toks[0], i + 1), v = to_int(toks[1], i + 1);
        if (u < 1 || v < 1)
            throw ValidationError("line " + std::to_string(i + 1) + ": labels are 1-indexed");
        max_label = static_cast<int>(std::max({static_cast<long long>(max_label), u, v}));
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    int n = max_label;
    if (bip)
        n = bip->first + bip->second;
    else if (vertices)
        n = *vertices;
    if (max_label > n)
        throw ValidationError("edge label " + std::to_string(max_label) + " exceeds the declared vertex count");
    EdgeListFile out;
    out.bipartite = bip;
    out.graph = SimpleGraph(n, edges);
    if (bip)
        for (auto [u, v] : out.graph.edges())
            if ((u < bip->first) == (v < bip->first))
                throw ValidationError("edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) +
                                      " lies inside one part");
    return out;
}

EdgeListFile read_edge_list(const std::filesystem::path& path) {
    return parse_edge_list(read_file(path));
}

std::string format_edge_list(const SimpleGraph& g, std::optional<std::pair<int, int>> bipartite) {
    std::string out;
    if (bipartite)
        out += "#bipartite " + std::to_string(bipartite->first) + " " + std::to_string(bipartite->second) + "\n";
    else
        out += "#vertices " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

WeightedBipartiteGraph parse_weighted_bipartite(std::string_view text) {
    std::optional<std::pair<int, int>> bip;
    std::optional<int> vertices;
    std::optional<WeightedBipartiteGraph> w;
    const auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        if (line.empty())
            continue;
        if (line.front() == '#') {
            if (parse_header(line, i + 1, bip, vertices) && bip && !w)
                w.emplace(bip->first, bip->second);
            continue;
        }
        if (!w)
            throw ValidationError("weighted file needs a '#bipartite n1 n2' header before its entries");
        const auto toks = split_ws(line);
        if (toks.size() != 3)
            throw ValidationError("line " + std::to_string(i + 1) + ": expected 'i j w'");
        const auto u = to_int(toks[0], i + 1), v = to_int(toks[1], i + 1);
        const double x = to_double(toks[2], i + 1);
        if (u < 1 || v < 1 || u > w->vertex_count() || v > w->vertex_count())
            throw ValidationError("line " + std::to_string(i + 1) + ": label out of range");
        w->set_weight(static_cast<int>(u - 1), static_cast<int>(v - 1), x);
    }
    if (!w)
        throw ValidationError("weighted file needs a '#bipartite n1 n2' header");
    return *w;
}

WeightedBipartiteGraph read_weighted_bipartite(const std::filesystem::path& path) {
    return parse_weighted_bipartite(read_file(path));
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    if (ec != std::errc())
        throw Error("could not format a double");
    return std::string(buf.data(), p);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw ValidationError("write failed for '" + path.string() + "'");
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

} // namespace entropygraph::io
