// JSON / DOT / plain-text emission for quivers, representations, arrow
// diagrams and seaweed reports. JSON uses insertion-ordered objects so the
// byte output is canonical; matrix entries are integers when integral and
// "p/q" strings otherwise.
#pragma once

#include "builder.hpp"
#include "seaweed.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace seaweed {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& x) {
    if (x.get_den() == 1) {
        if (x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
        return Json(x.get_num().get_str());
    }
    return Json(x.get_num().get_str() + "/" + x.get_den().get_str());
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
}

inline Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const Json& j, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j.at(i).at(c));
    return m;
}

// n lines of n space-separated integers
inline std::string matrix_to_text(const RationalMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

inline Json representation_to_json(const Representation& m) {
    Json j;
    j["orientation"] = m.q.orientation_string();
    j["dims"] = m.dims;
    Json alphas = Json::array(), betas = Json::array();
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) {
            alphas.push_back(nullptr);
            betas.push_back(nullptr);
        } else {
            alphas.push_back(matrix_to_json(m.alpha[e - 1]));
            betas.push_back(matrix_to_json(m.beta[e - 1]));
        }
    }
    j["alpha"] = std::move(alphas);
    j["beta"] = std::move(betas);
    return j;
}

inline Representation representation_from_json(const Json& j) {
    TypeAQuiver q = TypeAQuiver::parse_orientation(j.at("orientation").get<std::string>());
    Representation m(q, j.at("dims").get<std::vector<int>>());
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        m.alpha[e - 1] = matrix_from_json(j.at("alpha").at(e - 1), m.dim(q.alpha_target(e)),
                                          m.dim(q.alpha_source(e)));
        m.beta[e - 1] = matrix_from_json(j.at("beta").at(e - 1), m.dim(q.alpha_source(e)),
                                         m.dim(q.alpha_target(e)));
    }
    m.check_shapes();
    return m;
}

inline Json diagram_to_json(const ArrowDiagram& d) {
    Json j;
    j["vertex_count"] = d.vertex_count;
    Json nodes = Json::array();
    for (const auto& n : d.nodes) {
        Json jn;
        jn["column"] = n.column;
        jn["row"] = n.row;
        jn["number"] = n.number;
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : d.edges) {
        Json je;
        je["from"] = e.from;
        je["to"] = e.to;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

// numbered arrow diagram with the double arrows already reversed, matching
// the matrix units of the Richardson element
inline std::string diagram_to_dot(const ArrowDiagram& d) {
    std::ostringstream os;
    os << "digraph arrow_diagram {\n  rankdir=LR;\n  node [shape=box];\n";
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& n = d.nodes[i];
        os << "  n" << i << " [label=\"Δ(" << n.column << ")#" << n.row << " / " << n.number
           << "\"];\n";
    }
    for (const auto& e : d.edges) os << "  n" << e.to << " -> n" << e.from << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string quiver_to_dot(const TypeAQuiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n  rankdir=LR;\n";
    for (int v = 1; v <= q.n; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        os << "  v" << q.alpha_source(e) << " -> v" << q.alpha_target(e) << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline Json report_to_json(const SeaweedReport& r) {
    Json j;
    j["n"] = r.bd.n;
    j["a"] = r.a.parts;
    j["b"] = r.b.parts;
    j["orientation"] = r.quiver.orientation_string();
    j["e"] = r.e;
    j["d"] = r.d;
    j["dim_q"] = r.dim_q;
    j["dim_l"] = r.dim_l;
    j["dim_n"] = r.dim_n;
    j["ad_rank"] = r.ad_rank;
    j["verified"] = r.verified;
    Json rich = Json::array();
    for (int i = 0; i < r.richardson.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < r.richardson.cols(); ++c)
            row.push_back(static_cast<long long>(r.richardson.at(i, c).get_num().get_si()));
        rich.push_back(std::move(row));
    }
    j["richardson"] = std::move(rich);
    return j;
}

inline std::string report_to_text(const SeaweedReport& r) {
    std::ostringstream os;
    os << "n: " << r.bd.n << "\n";
    auto list = [&os](const char* name, const std::vector<int>& v) {
        os << name << ":";
        for (int x : v) os << ' ' << x;
        os << '\n';
    };
    list("a", r.a.parts);
    list("b", r.b.parts);
    os << "orientation: " << r.quiver.orientation_string() << '\n';
    list("e", r.e);
    list("d", r.d);
    os << "dim q: " << r.dim_q << '\n';
    os << "dim l: " << r.dim_l << '\n';
    os << "dim n: " << r.dim_n << '\n';
    os << "ad rank: " << r.ad_rank << '\n';
    os << "verified: " << (r.verified ? "true" : "false") << '\n';
    os << "richardson:\n" << matrix_to_text(r.richardson);
    return os.str();
}

} // namespace seaweed
