#include "nodalgeo/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace nodalgeo {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "expected header \"n m\"");
    ++lineno;
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw ParseError(lineno, "expected header \"n m\"");
    if (n <= 0) throw ParseError(lineno, "vertex count must be positive");
    if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file");
        ++lineno;
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    auto in = open_or_throw(path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

RotationSystem read_rotation(std::istream& in, const Graph& g) {
    RotationSystem rot;
    rot.order.assign(g.vertex_count(), {});
    std::vector<bool> seen(g.vertex_count(), false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected \"v: w1 w2 ...\"");
        int v = 0;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad vertex index before ':'");
        }
        if (v < 0 || v >= g.vertex_count()) throw ParseError(lineno, "vertex index out of range");
        if (seen[v]) throw ParseError(lineno, "duplicate rotation for vertex " + std::to_string(v));
        seen[v] = true;
        std::istringstream rest(line.substr(colon + 1));
        int w = 0;
        while (rest >> w) rot.order[v].push_back(w);
        if (!rest.eof()) throw ParseError(lineno, "bad neighbor list");
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v] && g.degree(v) > 0)
            throw ParseError(lineno, "missing rotation for vertex " + std::to_string(v));
    validate_rotation(g, rot);
    return rot;
}

RotationSystem load_rotation(const std::string& path, const Graph& g) {
    auto in = open_or_throw(path);
    return read_rotation(in, g);
}

std::string write_rotation(const RotationSystem& rot) {
    std::ostringstream out;
    for (size_t v = 0; v < rot.order.size(); ++v) {
        out << v << ":";
        for (int w : rot.order[v]) out << " " << w;
        out << "\n";
    }
    return out.str();
}

DenseMatrix read_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "expected matrix size");
    ++lineno;
    int n = 0;
    try {
        n = std::stoi(line);
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected matrix size");
    }
    if (n <= 0) throw ParseError(lineno, "matrix size must be positive");
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file");
        ++lineno;
        std::istringstream row(line);
        for (int j = 0; j < n; ++j)
            if (!(row >> m(i, j))) throw ParseError(lineno, "expected " + std::to_string(n) + " values");
    }
    return m;
}

DenseMatrix load_matrix(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix(in);
}

std::string write_matrix(const DenseMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.rows << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

}  // namespace nodalgeo
