#include <string>

#include "ramsey/graph.hpp"

// graph6: n encoded as one byte n+63 for n <= 62, or '~' followed by three
// bytes holding 18 bits for n <= 258047. The upper triangle is read in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into
// 6-bit groups, each offset by 63. Zero padding completes the last group.

namespace ramsey {

namespace {

constexpr int kLo = 63;
constexpr int kHi = 126;

[[noreturn]] void bad(const std::string& what, std::size_t offset) {
    fail("graph6: " + what + " at byte " + std::to_string(offset));
}

} // namespace

Graph parse_graph6(const std::string& raw) {
    std::string text = raw;
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();

    if (text.empty()) bad("truncated header", 0);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (static_cast<unsigned char>(text[i]) < kLo || static_cast<unsigned char>(text[i]) > kHi)
            bad("out-of-range byte", i);

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') bad("vertex count exceeds cap", 0);
        if (text.size() < 4) bad("truncated header", text.size());
        n = (static_cast<long long>(text[1] - kLo) << 12) |
            (static_cast<long long>(text[2] - kLo) << 6) | (text[3] - kLo);
        pos = 4;
    } else {
        n = text[0] - kLo;
        pos = 1;
    }
    if (n > Graph::kMaxVertices) bad("vertex count exceeds cap", 0);

    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes) bad("truncated bitstream", text.size());
    if (text.size() - pos > nbytes) bad("trailing data", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[pos + bit / 6] - kLo;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // Padding bits must be zero.
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
        int byte = text[pos + b / 6] - kLo;
        if ((byte >> (5 - b % 6)) & 1) bad("nonzero padding", pos + b / 6);
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
        out.push_back(static_cast<char>((n & 63) + kLo));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kLo));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kLo));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<int> nums;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        require(std::isdigit(static_cast<unsigned char>(text[i])),
                "edge list: unexpected character at byte " + std::to_string(i));
        int val = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            val = val * 10 + (text[i] - '0');
            require(val <= Graph::kMaxVertices, "edge list: label exceeds cap");
            ++i;
        }
        nums.push_back(val);
    }
    require(nums.size() % 2 == 0, "edge list: odd number of labels");
    require(!nums.empty(), "edge list: empty input");
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < nums.size(); k += 2) {
        edges.emplace_back(nums[k], nums[k + 1]);
        n = std::max({n, nums[k] + 1, nums[k + 1] + 1});
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace ramsey
