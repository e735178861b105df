#include "hlc/io.hpp"

#include <charconv>
#include <sstream>

namespace hlc {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // Next content line as tokens; comments stripped, blanks skipped.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
            std::vector<std::string> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
                if (i > start) tokens.push_back(line.substr(start, i - start));
            }
            if (!tokens.empty()) return tokens;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
    }

    std::vector<std::string> expect(std::size_t count, const std::string& what) {
        auto tokens = next();
        if (!tokens) {
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(line_no) + ": unexpected end of file, expected " +
                            what);
        }
        if (count != 0 && tokens->size() != count)
            fail("expected " + what + " (" + std::to_string(count) + " fields)");
        return *tokens;
    }

    long long to_int(const std::string& tok) {
        long long value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size()) fail("not an integer: '" + tok + "'");
        return value;
    }
};

} // namespace

Instance parse_instance(const std::string& text) {
    LineReader r(text);

    auto header = r.expect(2, "header 'HLC 1'");
    if (header[0] != "HLC") r.fail("expected 'HLC' header");
    if (header[1] != "1") r.fail("unsupported format version '" + header[1] + "'");

    auto kc = r.expect(2, "'<k> <c>'");
    long long k = r.to_int(kc[0]), c = r.to_int(kc[1]);
    if (k < 1 || k > kMaxColors) r.fail("k out of range");
    if (c < 0) r.fail("c must be non-negative");

    auto nm = r.expect(2, "'<n> <m>'");
    long long n = r.to_int(nm[0]), m = r.to_int(nm[1]);
    if (n < 0 || n > 10'000'000) r.fail("n out of range");
    if (m < 0 || m > 10'000'000) r.fail("m out of range");

    Instance inst;
    inst.k = static_cast<int>(k);
    inst.c_declared = static_cast<int>(c);
    inst.n = static_cast<int>(n);

    for (long long v = 0; v < n; ++v) {
        auto tokens = r.expect(0, "a color list");
        ColorMask mask = 0;
        long long prev = 0;
        for (const auto& tok : tokens) {
            long long color = r.to_int(tok);
            if (color < 1 || color > k) r.fail("color " + tok + " out of range 1..k");
            if (color <= prev) r.fail("list colors must be strictly ascending");
            prev = color;
            mask |= mask_bit(static_cast<int>(color));
        }
        inst.lists.push_back(mask);
    }

    for (long long e = 0; e < m; ++e) {
        auto tokens = r.expect(0, "an edge");
        std::vector<int> edge;
        long long prev = -1;
        for (const auto& tok : tokens) {
            long long v = r.to_int(tok);
            if (v < 0 || v >= n) r.fail("vertex " + tok + " out of range 0..n-1");
            if (v <= prev) r.fail("edge vertices must be strictly ascending");
            prev = v;
            edge.push_back(static_cast<int>(v));
        }
        inst.edges.push_back(std::move(edge));
    }

    if (auto extra = r.next())
        r.fail("trailing content after the last edge");

    inst.finalize();
    return inst;
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << "HLC 1\n";
    out << inst.k << ' ' << inst.c_declared << '\n';
    out << inst.n << ' ' << inst.m() << '\n';
    for (int v = 0; v < inst.n; ++v) {
        bool first = true;
        for (int c = 1; c <= inst.k; ++c) {
            if (!inst.list_has(v, c)) continue;
            if (!first) out << ' ';
            out << c;
            first = false;
        }
        out << '\n';
    }
    for (const auto& edge : inst.edges) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << edge[i];
        }
        out << '\n';
    }
    return out.str();
}

Solution parse_solution(const std::string& text, int n) {
    LineReader r(text);
    auto head = r.expect(1, "COLORABLE or UNCOLORABLE");
    Solution sol;
    if (head[0] == "UNCOLORABLE") {
        sol.colorable = false;
        return sol;
    }
    if (head[0] != "COLORABLE") r.fail("expected COLORABLE or UNCOLORABLE");
    sol.colorable = true;
    auto tokens = r.expect(static_cast<std::size_t>(n), "one color per vertex");
    sol.coloring = PartialColoring(n);
    for (int v = 0; v < n; ++v) {
        long long c = r.to_int(tokens[static_cast<std::size_t>(v)]);
        if (c < 0 || c > kMaxColors) r.fail("color out of range");
        sol.coloring.assign(v, static_cast<int>(c));
    }
    return sol;
}

std::string render_solution(const std::optional<PartialColoring>& coloring) {
    if (!coloring) return "UNCOLORABLE\n";
    std::ostringstream out;
    out << "COLORABLE\n";
    for (std::size_t v = 0; v < coloring->color.size(); ++v) {
        if (v) out << ' ';
        out << static_cast<int>(coloring->color[v]);
    }
    out << '\n';
    return out.str();
}

} // namespace hlc
