#include "clf/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "clf/errors.hpp"

namespace clf {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ >= text_.size()) return false;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        line = text_.substr(pos_, end - pos_);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos_ = end + 1;
        ++number_;
        return true;
    }

    int number() const { return number_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int number_ = 0;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<long long> integers(std::string_view s, int line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t') {
            ++i;
            continue;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc{}) fail(line, "expected an integer");
        i = static_cast<std::size_t>(ptr - s.data());
        if (i < s.size() && s[i] != ' ' && s[i] != '\t') fail(line, "unexpected character");
        out.push_back(v);
    }
    return out;
}

std::pair<long long, long long> header(LineReader& in, std::string_view keyword) {
    std::string_view line;
    if (!in.next(line)) fail(1, "empty input");
    if (line.substr(0, keyword.size()) != keyword ||
        (line.size() > keyword.size() && line[keyword.size()] != ' ')) {
        fail(in.number(), "expected '" + std::string(keyword) + " <n> <m>'");
    }
    const auto nums = integers(line.substr(keyword.size()), in.number());
    if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0 || nums[0] > (1LL << 30)) {
        fail(in.number(), "expected '" + std::string(keyword) + " <n> <m>'");
    }
    return {nums[0], nums[1]};
}

void expect_end(LineReader& in) {
    std::string_view line;
    while (in.next(line))
        if (!line.empty()) fail(in.number(), "unexpected trailing content");
}

}  // namespace

std::string format_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph(std::string_view text) {
    LineReader in(text);
    const auto [n, m] = header(in, "graph");
    std::vector<Edge> edges;
    std::string_view line;
    for (long long i = 0; i < m; ++i) {
        if (!in.next(line)) fail(in.number() + 1, "missing edge line");
        const auto nums = integers(line, in.number());
        if (nums.size() != 2) fail(in.number(), "expected '<u> <v>'");
        if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n) {
            fail(in.number(), "vertex index out of range");
        }
        edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    }
    expect_end(in);
    try {
        return make_graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string format_hypergraph(const Hypergraph& h, const ClassList& classes) {
    std::string out = "hypergraph " + std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i]);
        out += '\n';
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        out += "class " + std::to_string(c) + ":";
        for (auto b : classes[c]) out += " " + std::to_string(b);
        out += '\n';
    }
    return out;
}

HypergraphFile parse_hypergraph(std::string_view text) {
    LineReader in(text);
    const auto [n, m] = header(in, "hypergraph");
    std::vector<HyperEdge> edges;
    std::string_view line;
    for (long long i = 0; i < m; ++i) {
        if (!in.next(line)) fail(in.number() + 1, "missing edge line");
        HyperEdge e;
        for (auto v : integers(line, in.number())) {
            if (v < 0 || v >= n) fail(in.number(), "vertex index out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    HypergraphFile file;
    try {
        file.hypergraph = make_hypergraph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    if (file.hypergraph.edges() != edges) fail(in.number(), "edges are not in sorted order");
    while (in.next(line)) {
        if (line.empty()) continue;
        const std::string expected = "class " + std::to_string(file.classes.size()) + ":";
        if (line.substr(0, expected.size()) != expected) {
            fail(in.number(), "expected '" + expected + " <block indices>'");
        }
        std::vector<std::size_t> cls;
        for (auto b : integers(line.substr(expected.size()), in.number())) {
            if (b < 0 || b >= m) fail(in.number(), "block index out of range");
            cls.push_back(static_cast<std::size_t>(b));
        }
        file.classes.push_back(std::move(cls));
    }
    return file;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ParseError("write to '" + path + "' failed");
}

Graph load_graph(const std::string& path) {
    return parse_graph(read_text_file(path));
}

Hypergraph load_hypergraph(const std::string& path) {
    return parse_hypergraph(read_text_file(path)).hypergraph;
}

}  // namespace clf
