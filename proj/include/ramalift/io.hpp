#ifndef RAMALIFT_IO_HPP
#define RAMALIFT_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ramalift/bounds.hpp"
#include "ramalift/graph.hpp"
#include "ramalift/search.hpp"

namespace ramalift {

namespace detail {

inline std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path + ": cannot open for reading");
    return in;
}

inline std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path + ": cannot open for writing");
    return out;
}

[[noreturn]] inline void parse_fail(const std::string& name, int line, const std::string& what) {
    throw io_error(name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge-list format: line 1 "n m"; then m lines "u v" with 0 <= u < v < n.
// The file's edge order is the canonical signing order.
// ---------------------------------------------------------------------------

inline Graph read_graph(std::istream& in, const std::string& name = "<stream>") {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) detail::parse_fail(name, 1, "missing header line");
    ++lineno;
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            detail::parse_fail(name, lineno, "expected header 'n m', got '" + line + "'");
    }
    if (n < 0 || m < 0) detail::parse_fail(name, lineno, "negative counts in header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            detail::parse_fail(name, lineno + 1, "unexpected end of file: expected " +
                                                     std::to_string(m) + " edges");
        ++lineno;
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            detail::parse_fail(name, lineno, "expected edge 'u v', got '" + line + "'");
        if (u >= v) detail::parse_fail(name, lineno, "edges must have u < v");
        edges.push_back({u, v});
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw io_error(name + ": " + e.what());
    }
}

inline Graph read_graph_file(const std::string& path) {
    auto in = detail::open_for_read(path);
    return read_graph(in, path);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    auto out = detail::open_for_write(path);
    write_graph(out, g);
}

// ---------------------------------------------------------------------------
// Signing format: one entry per line, "+1" or "-1" ("0" allowed for unset),
// aligned with the edge-list order.
// ---------------------------------------------------------------------------

inline std::vector<int> read_sign_entries(std::istream& in, const std::string& name,
                                          bool allow_unset) {
    std::vector<int> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        std::string extra;
        if (ls >> extra) detail::parse_fail(name, lineno, "one entry per line");
        if (tok == "+1" || tok == "1") out.push_back(+1);
        else if (tok == "-1") out.push_back(-1);
        else if (tok == "0" && allow_unset) out.push_back(0);
        else detail::parse_fail(name, lineno, "expected " +
                                std::string(allow_unset ? "'+1', '-1' or '0'" : "'+1' or '-1'") +
                                ", got '" + tok + "'");
    }
    return out;
}

inline Signing read_signing_file(const std::string& path, const Graph& g) {
    auto in = detail::open_for_read(path);
    Signing s{read_sign_entries(in, path, false)};
    try {
        s.validate(g);
    } catch (const std::invalid_argument& e) {
        throw io_error(path + ": " + e.what());
    }
    return s;
}

inline PartialSigning read_partial_signing_file(const std::string& path, const Graph& g) {
    auto in = detail::open_for_read(path);
    PartialSigning p{read_sign_entries(in, path, true)};
    try {
        p.validate(g);
    } catch (const std::invalid_argument& e) {
        throw io_error(path + ": " + e.what());
    }
    return p;
}

inline void write_signing(std::ostream& out, const std::vector<int>& entries) {
    for (int s : entries) out << (s > 0 ? "+1" : (s < 0 ? "-1" : "0")) << '\n';
}

inline void write_signing_file(const std::string& path, const std::vector<int>& entries) {
    auto out = detail::open_for_write(path);
    write_signing(out, entries);
}

// ---------------------------------------------------------------------------
// Polynomial format: one line of ascending integer coefficients, with
// optional leading '#' comment lines.
// ---------------------------------------------------------------------------

inline IntPoly read_poly(std::istream& in, const std::string& name = "<stream>") {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream probe(line);
        std::string tok;
        if (!(probe >> tok)) continue;  // blank line
        try {
            return poly_from_text(line);
        } catch (const io_error& e) {
            detail::parse_fail(name, lineno, e.what());
        }
    }
    detail::parse_fail(name, lineno + 1, "no coefficient line found");
}

inline IntPoly read_poly_file(const std::string& path) {
    auto in = detail::open_for_read(path);
    return read_poly(in, path);
}

inline void write_poly_file(const std::string& path, const IntPoly& f,
                            const std::string& comment = "") {
    auto out = detail::open_for_write(path);
    if (!comment.empty()) out << "# " << comment << '\n';
    out << to_text(f) << '\n';
}

// ---------------------------------------------------------------------------
// Certificate JSON. All rationals are decimal strings "num/den".
// ---------------------------------------------------------------------------

inline nlohmann::json bound_to_json(const RootBound& b) {
    return nlohmann::json{{"kind", b.kind_string()},
                          {"minimal_poly", to_text(b.minimal_poly)},
                          {"interval", {rat_to_string(b.lo), rat_to_string(b.hi)}},
                          {"degenerate", b.degenerate}};
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["graph"] = {{"n", c.n},
                  {"m", c.m},
                  {"degrees", c.degrees},
                  {"bipartite", c.bipartite},
                  {"components", c.components}};
    j["bound"] = bound_to_json(c.bound);
    j["eigenvalues"] = nlohmann::json::array();
    for (const auto& ev : c.eigenvalues)
        j["eigenvalues"].push_back({{"lo", rat_to_string(ev.lo)},
                                    {"hi", rat_to_string(ev.hi)},
                                    {"multiplicity", ev.multiplicity},
                                    {"trivial", ev.trivial}});
    j["verdict"] = to_string(c.verdict);
    j["method"] = c.method;
    j["trail"] = nlohmann::json::array();
    for (const auto& t : c.trail)
        j["trail"].push_back(
            {{"edge", t.edge}, {"choice", t.choice}, {"comparison", to_string(t.comparison)}});
    return j;
}

inline void write_certificate_file(const std::string& path, const Certificate& c) {
    auto out = detail::open_for_write(path);
    out << certificate_to_json(c).dump(2) << '\n';
}

}  // namespace ramalift

#endif  // RAMALIFT_IO_HPP
