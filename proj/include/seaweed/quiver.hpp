// Type-A quivers with per-edge orientation. Vertices are 1..n; edge e
// (1 <= e <= n-1) joins vertices e and e+1 and carries the arrow alpha_e,
// whose reverse in the double quiver is beta_e. An absent edge splits the
// quiver into disjoint type-A components.
#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace seaweed {

enum class EdgeDir : unsigned char {
    absent,
    right, // alpha_e : e -> e+1
    left,  // alpha_e : e+1 -> e
};

struct ArrowRef {
    int edge = 0;      // 1-based
    bool beta = false; // false = alpha_e, true = beta_e
    bool operator==(const ArrowRef&) const = default;
};

struct TypeAQuiver {
    int n = 0;                  // number of vertices
    std::vector<EdgeDir> edges; // size n-1, index e-1

    TypeAQuiver() = default;
    explicit TypeAQuiver(int vertices, std::vector<EdgeDir> e = {})
        : n(vertices), edges(std::move(e)) {
        if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
        if (edges.empty()) edges.assign(static_cast<size_t>(n - 1), EdgeDir::absent);
        if (static_cast<int>(edges.size()) != n - 1)
            throw std::invalid_argument("edge list size must be vertex count - 1");
    }

    bool operator==(const TypeAQuiver&) const = default;

    bool has_edge(int e) const { return e >= 1 && e <= n - 1 && edges[e - 1] != EdgeDir::absent; }
    EdgeDir dir(int e) const { return edges[e - 1]; }

    int alpha_source(int e) const { return dir(e) == EdgeDir::right ? e : e + 1; }
    int alpha_target(int e) const { return dir(e) == EdgeDir::right ? e + 1 : e; }
    int source_of(ArrowRef a) const { return a.beta ? alpha_target(a.edge) : alpha_source(a.edge); }
    int target_of(ArrowRef a) const { return a.beta ? alpha_source(a.edge) : alpha_target(a.edge); }

    // alpha-arrows with target v (at most two)
    std::vector<int> edges_into(int v) const {
        std::vector<int> r;
        if (has_edge(v - 1) && alpha_target(v - 1) == v) r.push_back(v - 1);
        if (has_edge(v) && alpha_target(v) == v) r.push_back(v);
        return r;
    }
    std::vector<int> edges_out_of(int v) const {
        std::vector<int> r;
        if (has_edge(v - 1) && alpha_source(v - 1) == v) r.push_back(v - 1);
        if (has_edge(v) && alpha_source(v) == v) r.push_back(v);
        return r;
    }

    bool is_source(int v) const { return edges_into(v).empty(); }
    bool is_sink(int v) const { return edges_out_of(v).empty(); }
    bool is_admissible(int v) const { return is_source(v) || is_sink(v); }
    bool is_isolated(int v) const { return !has_edge(v - 1) && !has_edge(v); }

    // i >= j in the path order: an alpha-path from i to j exists (reflexive).
    bool geq(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        if (i == j) return true;
        if (i < j) {
            for (int e = i; e < j; ++e)
                if (!has_edge(e) || dir(e) != EdgeDir::right) return false;
            return true;
        }
        for (int e = j; e < i; ++e)
            if (!has_edge(e) || dir(e) != EdgeDir::left) return false;
        return true;
    }
    bool gt(int i, int j) const { return i != j && geq(i, j); }
    bool comparable(int i, int j) const { return geq(i, j) || geq(j, i); }

    // inclusive vertex ranges of the connected components
    std::vector<std::pair<int, int>> components() const {
        std::vector<std::pair<int, int>> comps;
        int lo = 1;
        for (int e = 1; e <= n - 1; ++e) {
            if (!has_edge(e)) {
                comps.emplace_back(lo, e);
                lo = e + 1;
            }
        }
        comps.emplace_back(lo, n);
        return comps;
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
    }

    // tokens {<, >, .} per edge, left to right, comma separated
    static TypeAQuiver parse_orientation(const std::string& s) {
        std::vector<EdgeDir> dirs;
        if (!s.empty()) {
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }),
                          tok.end());
                if (tok == ">")
                    dirs.push_back(EdgeDir::right);
                else if (tok == "<")
                    dirs.push_back(EdgeDir::left);
                else if (tok == ".")
                    dirs.push_back(EdgeDir::absent);
                else
                    throw std::invalid_argument("bad orientation token: '" + tok + "'");
            }
        }
        const int vertices = static_cast<int>(dirs.size()) + 1;
        return TypeAQuiver(vertices, std::move(dirs));
    }

    std::string orientation_string() const {
        std::string s;
        for (int e = 1; e <= n - 1; ++e) {
            if (e > 1) s += ',';
            s += dir(e) == EdgeDir::right ? '>' : dir(e) == EdgeDir::left ? '<' : '.';
        }
        return s;
    }
};

// One generator of the relation ideal: sum of signed length-2 paths
// outer*inner with a common source and target.
struct RelationTerm {
    int sign = 1;
    ArrowRef outer; // applied second
    ArrowRef inner; // applied first
};

struct Relation {
    int source = 0;
    int target = 0;
    std::vector<RelationTerm> terms;
};

// The ideal generators for a type-A double quiver, vertex by vertex:
// monomials beta*alpha at sources and sinks, commutators at non-admissible
// vertices. Arrows alpha_0 / alpha_n (and their betas) are zero, so terms
// touching a missing edge are dropped; a relation with no surviving terms is
// omitted.
inline std::vector<Relation> build_relations(const TypeAQuiver& q) {
    std::vector<Relation> rels;
    auto alpha = [](int e) { return ArrowRef{e, false}; };
    auto beta = [](int e) { return ArrowRef{e, true}; };
    for (int j = 1; j <= q.n; ++j) {
        const bool L = q.has_edge(j - 1); // edge j-1 joins j-1, j
        const bool R = q.has_edge(j);     // edge j joins j, j+1
        if (!L && !R) continue;
        if (q.is_source(j)) {
            if (L) rels.push_back({j, j, {{1, beta(j - 1), alpha(j - 1)}}});
            if (R) rels.push_back({j, j, {{1, beta(j), alpha(j)}}});
        } else if (q.is_sink(j)) {
            if (L && R) {
                rels.push_back({q.alpha_source(j - 1), q.alpha_source(j), {{1, beta(j), alpha(j - 1)}}});
                rels.push_back({q.alpha_source(j), q.alpha_source(j - 1), {{1, beta(j - 1), alpha(j)}}});
            }
        } else if (q.alpha_target(j) == j) {
            // arrows flow j-1 <- j <- j+1
            rels.push_back({j, j, {{1, beta(j - 1), alpha(j - 1)}, {-1, alpha(j), beta(j)}}});
        } else {
            // arrows flow j-1 -> j -> j+1
            rels.push_back({j, j, {{1, alpha(j - 1), beta(j - 1)}, {-1, beta(j), alpha(j)}}});
        }
    }
    return rels;
}

} // namespace seaweed
