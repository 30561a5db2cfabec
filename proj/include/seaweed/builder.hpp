// Construction of the unique rigid Delta-filtered module M(d) for an
// arbitrary Delta-dimension vector: peel staircase supports off each linearly
// oriented segment, then glue segment by segment at the interior admissible
// vertices, pairing the l-th summand in the descending order at the gluing
// vertex with the (c+1-l)-th of the next segment. The arrow diagram read off
// the decomposition drives the explicit Richardson matrix.
#pragma once

#include "gluing.hpp"

#include <map>
#include <numeric>

namespace seaweed {

// interior vertices (per component) that are sources or sinks, ascending
inline std::vector<int> interior_admissible(const TypeAQuiver& q) {
    std::vector<int> out;
    for (auto [lo, hi] : q.components())
        for (int v = lo + 1; v < hi; ++v)
            if (q.is_admissible(v)) out.push_back(v);
    return out;
}

namespace detail {

// boundaries [lo, i_1, ..., i_t, hi] of the linearly oriented segments of one
// component
inline std::vector<int> segment_bounds(const TypeAQuiver& q, int lo, int hi) {
    std::vector<int> b{lo};
    for (int v = lo + 1; v < hi; ++v)
        if (q.is_admissible(v)) b.push_back(v);
    b.push_back(hi);
    return b;
}

} // namespace detail

// the restrictions of d to the segments, overlapping exactly at the interior
// admissible vertices
inline std::vector<std::vector<int>> segment_vectors(const std::vector<int>& d,
                                                     const TypeAQuiver& q) {
    if (static_cast<int>(d.size()) != q.n)
        throw std::invalid_argument("segment_vectors: length mismatch");
    std::vector<std::vector<int>> out;
    for (auto [lo, hi] : q.components()) {
        auto bounds = detail::segment_bounds(q, lo, hi);
        for (size_t s = 0; s + 1 < bounds.size(); ++s) {
            std::vector<int> v(q.n, 0);
            for (int u = bounds[s]; u <= bounds[s + 1]; ++u) v[u - 1] = d[u - 1];
            out.push_back(std::move(v));
        }
    }
    return out;
}

// iterated peeling: take the full support, subtract its indicator, repeat;
// the supports form a descending chain whose indicators sum to d
inline std::vector<std::vector<int>> support_peel(std::vector<int> d) {
    std::vector<std::vector<int>> peels;
    for (;;) {
        std::vector<int> supp;
        for (size_t v = 0; v < d.size(); ++v)
            if (d[v] > 0) supp.push_back(static_cast<int>(v) + 1);
        if (supp.empty()) break;
        for (int v : supp) --d[v - 1];
        peels.push_back(std::move(supp));
    }
    return peels;
}

// staircase module of one peeled support set; the support must lie in a
// single segment (totally ordered), which staircase_rep enforces
inline Representation segment_summand_rep(const std::vector<int>& support, const TypeAQuiver& q) {
    return staircase_rep(support, q);
}

struct Summand {
    std::vector<int> support; // sorted ascending
    Representation rep;       // in R^alpha form
};

struct SummandDecomposition {
    std::vector<int> delta;
    std::vector<Summand> summands; // final construction order; row in the
                                   // arrow diagram is size - position
    Representation module;         // direct sum in listed order, R^alpha form

    std::map<std::vector<int>, int> support_multiset() const {
        std::map<std::vector<int>, int> ms;
        for (const auto& s : summands) ++ms[s.support];
        return ms;
    }
};

// one recorded order comparison from the build, for cross-checking against
// the semantic order
struct OrderCheck {
    Representation a, b;
    int vertex = 0;
    bool linear = false; // true: decided by linear_order_geq, else general
    bool geq_ab = false;
    bool geq_ba = false;
};
using OrderTrace = std::vector<OrderCheck>;

// support sets of indecomposable summands are closed under meets and joins
// of non-comparable pairs
inline bool indecomposable_support_check(const std::vector<int>& k, const TypeAQuiver& q) {
    for (int a : k)
        for (int b : k) {
            if (a >= b || q.comparable(a, b)) continue;
            for (int v = 1; v <= q.n; ++v) {
                if (std::find(k.begin(), k.end(), v) != k.end()) continue;
                if (q.geq(a, v) && q.geq(b, v)) return false;
                if (q.geq(v, a) && q.geq(v, b)) return false;
            }
        }
    return true;
}

namespace detail {

// derived segment pieces of a summand support: intersections with the
// segment intervals; this is the gluing history, since a glued support meets
// each segment exactly in the piece used there
inline std::vector<std::vector<int>> history_pieces(const std::vector<int>& support,
                                                    const std::vector<int>& bounds) {
    std::vector<std::vector<int>> pieces;
    for (size_t s = 0; s + 1 < bounds.size(); ++s) {
        std::vector<int> p;
        for (int v : support)
            if (v >= bounds[s] && v <= bounds[s + 1]) p.push_back(v);
        pieces.push_back(std::move(p));
    }
    return pieces;
}

} // namespace detail

// Segment-wise order at a boundary vertex u: walk the derived histories from
// the segment ending at u leftward; equal pieces continue, the rightmost
// difference decides through the linear order at its right endpoint. The
// compared pieces must be nested, as in the construction.
inline bool general_order_geq(const TypeAQuiver& q, const std::vector<int>& bounds,
                              const std::vector<int>& k1, const std::vector<int>& k2, int u) {
    auto h1 = detail::history_pieces(k1, bounds);
    auto h2 = detail::history_pieces(k2, bounds);
    int seg = -1;
    for (size_t s = 0; s + 1 < bounds.size(); ++s)
        if (bounds[s + 1] == u) seg = static_cast<int>(s);
    if (seg < 0) throw std::invalid_argument("general_order_geq: vertex is not a segment boundary");
    for (int s = seg; s >= 0; --s) {
        const auto& p1 = h1[s];
        const auto& p2 = h2[s];
        if (p1 == p2) {
            bool shared = std::find(p1.begin(), p1.end(), bounds[s]) != p1.end();
            if (s == 0 || !shared) return true; // isomorphic from here on
            continue;
        }
        auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
            for (int x : a)
                if (std::find(b.begin(), b.end(), x) == b.end()) return false;
            return true;
        };
        if (!subset(p1, p2) && !subset(p2, p1))
            throw std::invalid_argument("general_order_geq: segment pieces not nested");
        int right = bounds[s + 1];
        return linear_order_geq(q, p1, p2, right, glue_kind_at(q, right));
    }
    return true;
}

namespace detail {

inline std::vector<int> support_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u = a;
    for (int x : b)
        if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
    std::sort(u.begin(), u.end());
    return u;
}

inline bool contains(const std::vector<int>& s, int v) {
    return std::find(s.begin(), s.end(), v) != s.end();
}

// stable descending sort by a strict order derived from a geq predicate;
// records every decided comparison when a trace is requested
template <class Geq>
void sort_descending(std::vector<Summand>& xs, int vertex, bool linear, Geq geq, OrderTrace* trace) {
    std::stable_sort(xs.begin(), xs.end(), [&](const Summand& a, const Summand& b) {
        bool ab = geq(a, b), ba = geq(b, a);
        if (!ab && !ba) throw std::logic_error("summand order: incomparable pair");
        return ab && !ba;
    });
    if (trace)
        for (size_t x = 0; x < xs.size(); ++x)
            for (size_t y = x + 1; y < xs.size(); ++y)
                trace->push_back({xs[x].rep, xs[y].rep, vertex, linear, geq(xs[x], xs[y]),
                                  geq(xs[y], xs[x])});
}

} // namespace detail

// The main construction. Per connected component: peel each segment, then
// fold left to right over the interior admissible vertices, gluing the l-th
// accumulated summand (descending at the vertex) with the (c+1-l)-th summand
// of the next segment; summands missing the vertex pass through. Components
// and leftovers stay as direct summands.
inline SummandDecomposition build_M(const std::vector<int>& d, const TypeAQuiver& q,
                                    OrderTrace* trace = nullptr) {
    if (static_cast<int>(d.size()) != q.n) throw std::invalid_argument("build_M: length mismatch");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("build_M: negative entry");

    SummandDecomposition out;
    out.delta = d;
    std::vector<Summand> all;

    for (auto [lo, hi] : q.components()) {
        auto bounds = detail::segment_bounds(q, lo, hi);
        std::vector<Summand> acc;
        for (size_t s = 0; s + 1 < bounds.size(); ++s) {
            std::vector<int> dv(q.n, 0);
            for (int u = bounds[s]; u <= bounds[s + 1]; ++u) dv[u - 1] = d[u - 1];
            std::vector<Summand> seg;
            for (auto& supp : support_peel(dv)) seg.push_back({supp, segment_summand_rep(supp, q)});
            if (s == 0) {
                acc = std::move(seg);
                continue;
            }
            const int v = bounds[s];
            const int c = d[v - 1];
            if (c == 0) {
                for (auto& x : seg) acc.push_back(std::move(x));
                continue;
            }
            std::vector<Summand> a_in, a_out, b_in, b_out;
            for (auto& x : acc) (detail::contains(x.support, v) ? a_in : a_out).push_back(std::move(x));
            for (auto& x : seg) (detail::contains(x.support, v) ? b_in : b_out).push_back(std::move(x));
            if (static_cast<int>(a_in.size()) != c || static_cast<int>(b_in.size()) != c)
                throw std::logic_error("build_M: summand count at gluing vertex mismatch");
            GlueKind kind = glue_kind_at(q, v);
            detail::sort_descending(
                a_in, v, false,
                [&](const Summand& x, const Summand& y) {
                    return general_order_geq(q, bounds, x.support, y.support, v);
                },
                trace);
            detail::sort_descending(
                b_in, v, true,
                [&](const Summand& x, const Summand& y) {
                    return linear_order_geq(q, x.support, y.support, v, kind);
                },
                trace);
            std::vector<Summand> next;
            for (int l = 0; l < c; ++l) {
                Representation g = glue_at(a_in[l].rep, b_in[c - 1 - l].rep, v, kind);
                next.push_back({detail::support_union(a_in[l].support, b_in[c - 1 - l].support),
                                std::move(g)});
            }
            for (auto& x : a_out) next.push_back(std::move(x));
            for (auto& x : b_out) next.push_back(std::move(x));
            acc = std::move(next);
        }
        for (auto& x : acc) all.push_back(std::move(x));
    }

    // assemble the module and validate the decomposition
    Representation module(q, std::vector<int>(q.n, 0));
    for (const auto& s : all) module = direct_sum(module, s.rep);
    if (module.total_dim() > 0) module = normalize_alpha(module);
    std::vector<int> check(q.n, 0);
    for (const auto& s : all) {
        if (!indecomposable_support_check(s.support, q))
            throw std::logic_error("build_M: summand support fails the closure conditions");
        for (int v : s.support) ++check[v - 1];
    }
    if (check != d) throw std::logic_error("build_M: Delta-dimension vector mismatch");
    out.summands = std::move(all);
    out.module = std::move(module);
    return out;
}

// Arrow diagram of M(d): one node per Delta-composition factor (column =
// quiver vertex, one row per summand, glued factors shared), a double arrow
// from factor a to factor b when b > a with no factor of the same summand
// strictly between. Numbering is column-wise left to right, bottom to top.
struct ArrowDiagram {
    struct Node {
        int column = 0;
        int row = 0;    // 1 = top
        int number = 0; // 1..total
    };
    struct Edge {
        int from = 0, to = 0; // node indices into nodes
    };
    int vertex_count = 0;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

inline ArrowDiagram arrow_diagram(const std::vector<int>& d, const TypeAQuiver& q) {
    SummandDecomposition dec = build_M(d, q);
    ArrowDiagram dia;
    dia.vertex_count = q.n;
    const int m = static_cast<int>(dec.summands.size());
    std::map<std::pair<int, int>, int> node_at; // (column, row) -> node index
    for (int p = 0; p < m; ++p) {
        int row = m - p;
        for (int v : dec.summands[p].support) {
            node_at[{v, row}] = static_cast<int>(dia.nodes.size());
            dia.nodes.push_back({v, row, 0});
        }
    }
    int counter = 0;
    for (int col = 1; col <= q.n; ++col) {
        std::vector<std::pair<int, int>> rows; // (row, node index), bottom first
        for (const auto& [key, idx] : node_at)
            if (key.first == col) rows.push_back({key.second, idx});
        std::sort(rows.begin(), rows.end(), [](auto a, auto b) { return a.first > b.first; });
        for (auto [row, idx] : rows) dia.nodes[idx].number = ++counter;
    }
    for (int p = 0; p < m; ++p) {
        int row = m - p;
        const auto& k = dec.summands[p].support;
        for (int a : k)
            for (int b : k) {
                if (a == b || !q.gt(b, a)) continue;
                bool between = false;
                for (int c : k)
                    if (c != a && c != b && q.gt(b, c) && q.gt(c, a)) between = true;
                if (between) continue;
                dia.edges.push_back({node_at[{a, row}], node_at[{b, row}]});
            }
    }
    return dia;
}

} // namespace seaweed
