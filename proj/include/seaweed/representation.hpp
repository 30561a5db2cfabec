// Representations of the double of a type-A quiver subject to the relation
// ideal: per-vertex spaces plus one exact rational matrix per alpha and beta
// arrow. Verma modules, staircase modules for a support set, Delta-dimension
// vectors, projective dimension vectors and the R^alpha normal form all live
// here.
#pragma once

#include "matrix.hpp"
#include "quiver.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace seaweed {

struct Representation {
    TypeAQuiver q;
    std::vector<int> dims;              // index v-1
    std::vector<RationalMatrix> alpha;  // index e-1; shape dims[t] x dims[s]
    std::vector<RationalMatrix> beta;   // index e-1; shape dims[s] x dims[t]

    Representation() = default;
    explicit Representation(const TypeAQuiver& quiver, std::vector<int> d = {})
        : q(quiver), dims(std::move(d)) {
        if (dims.empty()) dims.assign(q.n, 0);
        if (static_cast<int>(dims.size()) != q.n)
            throw std::invalid_argument("dimension vector length mismatch");
        alpha.resize(q.n - 1);
        beta.resize(q.n - 1);
        for (int e = 1; e <= q.n - 1; ++e) {
            if (!q.has_edge(e)) continue;
            alpha[e - 1] = RationalMatrix(dim(q.alpha_target(e)), dim(q.alpha_source(e)));
            beta[e - 1] = RationalMatrix(dim(q.alpha_source(e)), dim(q.alpha_target(e)));
        }
    }

    int dim(int v) const { return dims[v - 1]; }
    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

    const RationalMatrix& arrow(ArrowRef a) const { return a.beta ? beta[a.edge - 1] : alpha[a.edge - 1]; }
    RationalMatrix& arrow(ArrowRef a) { return a.beta ? beta[a.edge - 1] : alpha[a.edge - 1]; }

    void check_shapes() const {
        for (int e = 1; e <= q.n - 1; ++e) {
            if (!q.has_edge(e)) continue;
            int s = dim(q.alpha_source(e)), t = dim(q.alpha_target(e));
            if (alpha[e - 1].rows() != t || alpha[e - 1].cols() != s ||
                beta[e - 1].rows() != s || beta[e - 1].cols() != t)
                throw std::invalid_argument("arrow matrix shape mismatch");
        }
    }
};

inline RationalMatrix evaluate(const Representation& m, const Relation& r) {
    RationalMatrix acc(m.dim(r.target), m.dim(r.source));
    for (const auto& t : r.terms) {
        RationalMatrix p = m.arrow(t.outer) * m.arrow(t.inner);
        acc = t.sign > 0 ? acc + p : acc - p;
    }
    return acc;
}

inline bool check_relations(const Representation& m) {
    m.check_shapes();
    for (const auto& r : build_relations(m.q))
        if (!evaluate(m, r).is_zero()) return false;
    return true;
}

// Delta-filtered test: every alpha injective and, at each vertex with two
// incoming alpha-arrows, trivial intersection of their images. Relation
// failure is a contract violation, reported distinctly from a false result.
inline bool is_delta_filtered(const Representation& m) {
    if (!check_relations(m))
        throw std::invalid_argument("is_delta_filtered: representation violates the relation ideal");
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        if (rank(m.alpha[e - 1]) != m.dim(m.q.alpha_source(e))) return false;
    }
    for (int v = 1; v <= m.q.n; ++v) {
        auto in = m.q.edges_into(v);
        if (in.size() == 2 &&
            image_intersection_dim(m.alpha[in[0] - 1], m.alpha[in[1] - 1]) != 0)
            return false;
    }
    return true;
}

// d_i = dim_i - sum of source dims over alpha-arrows into i
inline std::vector<int> delta_dim(const Representation& m) {
    std::vector<int> d(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        int x = m.dim(v);
        for (int e : m.q.edges_into(v)) x -= m.dim(m.q.alpha_source(e));
        if (x < 0)
            throw std::invalid_argument("delta_dim: negative entry, input is not Delta-filtered");
        d[v - 1] = x;
    }
    return d;
}

// The staircase module attached to a support set I lying in one linearly
// oriented stretch: basis at vertex v is the set of u in I with u >= v in the
// path order, alpha acts by index inclusion and beta drops one layer. For
// I = {i} this is the Verma module Delta(i).
inline Representation staircase_rep(std::vector<int> support, const TypeAQuiver& q) {
    if (support.empty()) throw std::invalid_argument("staircase_rep: empty support");
    for (int u : support) q.check_vertex(u);
    // sort descending in the path order; all elements must be comparable
    std::sort(support.begin(), support.end(), [&](int a, int b) {
        if (a == b) return false;
        if (q.gt(a, b)) return true;
        if (q.gt(b, a)) return false;
        throw std::invalid_argument("staircase_rep: support not totally ordered");
    });
    const int k = static_cast<int>(support.size());
    // layer(v) = number of elements of I dominating v (they form a prefix)
    std::vector<int> layers(q.n, 0);
    for (int v = 1; v <= q.n; ++v) {
        int c = 0;
        while (c < k && q.geq(support[c], v)) ++c;
        layers[v - 1] = c;
    }
    Representation m(q, layers);
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        int s = q.alpha_source(e), t = q.alpha_target(e);
        for (int i = 0; i < m.dim(s); ++i) m.alpha[e - 1].at(i, i) = 1; // prefix inclusion
        for (int i = 1; i < m.dim(t); ++i)
            if (i - 1 < m.dim(s)) m.beta[e - 1].at(i - 1, i) = 1; // drop to previous layer
    }
    if (!check_relations(m)) throw std::logic_error("staircase_rep: relations violated");
    if (!is_delta_filtered(m)) throw std::logic_error("staircase_rep: not Delta-filtered");
    auto d = delta_dim(m);
    for (int v = 1; v <= q.n; ++v) {
        bool in = std::find(support.begin(), support.end(), v) != support.end();
        if (d[v - 1] != (in ? 1 : 0))
            throw std::logic_error("staircase_rep: Delta-dimension vector mismatch");
    }
    return m;
}

// Verma module Delta(i): dimension one on the alpha-reachable set of i,
// identity alphas, zero betas.
inline Representation verma(const TypeAQuiver& q, int i) { return staircase_rep({i}, q); }

// dimvec of the indecomposable projective P(i) over the quotient algebra:
// dimvec P(i) = dimvec Delta(i) + sum of dimvec P(j) over predecessors j of i
// (vertices with an arrow j -> i).
inline std::vector<int> proj_dimvec(const TypeAQuiver& q, int i) {
    q.check_vertex(i);
    std::map<int, std::vector<int>> memo;
    std::function<const std::vector<int>&(int)> rec = [&](int v) -> const std::vector<int>& {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        std::vector<int> d(q.n, 0);
        for (int u = 1; u <= q.n; ++u)
            if (q.geq(v, u)) d[u - 1] = 1; // dimvec Delta(v)
        for (int e : q.edges_into(v)) {
            const auto& p = rec(q.alpha_source(e));
            for (int u = 0; u < q.n; ++u) d[u] += p[u];
        }
        return memo.emplace(v, std::move(d)).first->second;
    };
    return rec(i);
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.q == b.q)) throw std::invalid_argument("direct_sum: different quivers");
    std::vector<int> dims(a.q.n);
    for (int v = 0; v < a.q.n; ++v) dims[v] = a.dims[v] + b.dims[v];
    Representation m(a.q, dims);
    for (int e = 1; e <= a.q.n - 1; ++e) {
        if (!a.q.has_edge(e)) continue;
        int s = a.q.alpha_source(e), t = a.q.alpha_target(e);
        m.alpha[e - 1].paste(0, 0, a.alpha[e - 1]);
        m.alpha[e - 1].paste(a.dim(t), a.dim(s), b.alpha[e - 1]);
        m.beta[e - 1].paste(0, 0, a.beta[e - 1]);
        m.beta[e - 1].paste(a.dim(s), a.dim(t), b.beta[e - 1]);
    }
    return m;
}

// Change of basis: new coordinates y at vertex v are related to old ones by
// x = T_v y; arrows become T_t^{-1} M T_s.
inline Representation conjugate(const Representation& m, const std::vector<RationalMatrix>& t) {
    Representation r = m;
    std::vector<RationalMatrix> tinv(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        if (t[v - 1].rows() != m.dim(v) || t[v - 1].cols() != m.dim(v))
            throw std::invalid_argument("conjugate: block shape mismatch");
        tinv[v - 1] = inverse(t[v - 1]);
    }
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        int s = m.q.alpha_source(e), tt = m.q.alpha_target(e);
        r.alpha[e - 1] = tinv[tt - 1] * m.alpha[e - 1] * t[s - 1];
        r.beta[e - 1] = tinv[s - 1] * m.beta[e - 1] * t[tt - 1];
    }
    return r;
}

namespace detail {

// Vertices ordered so that alpha-sources come before alpha-targets.
inline std::vector<int> alpha_topological_order(const TypeAQuiver& q) {
    std::vector<int> indeg(q.n, 0), order;
    for (int e = 1; e <= q.n - 1; ++e)
        if (q.has_edge(e)) ++indeg[q.alpha_target(e) - 1];
    std::vector<int> stack;
    for (int v = 1; v <= q.n; ++v)
        if (indeg[v - 1] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int e : q.edges_out_of(v))
            if (--indeg[q.alpha_target(e) - 1] == 0) stack.push_back(q.alpha_target(e));
    }
    if (static_cast<int>(order.size()) != q.n) throw std::logic_error("quiver has an oriented cycle");
    return order;
}

// Applies a basis change at one vertex to every adjacent arrow matrix.
inline void rebase_vertex(Representation& m, int v, const RationalMatrix& t) {
    RationalMatrix ti = inverse(t);
    for (int e : m.q.edges_into(v)) m.alpha[e - 1] = ti * m.alpha[e - 1];
    for (int e : m.q.edges_out_of(v)) m.alpha[e - 1] = m.alpha[e - 1] * t;
    for (int e : m.q.edges_into(v)) m.beta[e - 1] = m.beta[e - 1] * t; // beta leaves v
    for (int e : m.q.edges_out_of(v)) m.beta[e - 1] = ti * m.beta[e - 1];
}

} // namespace detail

// Layout of the R^alpha normal form at one vertex: row offsets assigned to
// each incoming alpha (by edge) and to the complement.
struct AlphaLayout {
    // per vertex v (index v-1): list of (edge, row offset) for incoming alphas
    std::vector<std::vector<std::pair<int, int>>> offsets;
};

// Default layout: incoming alpha images stacked first (left edge, then right
// edge), complement last.
inline AlphaLayout stacked_layout(const Representation& m) {
    AlphaLayout lay;
    lay.offsets.resize(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        int off = 0;
        for (int e : m.q.edges_into(v)) {
            lay.offsets[v - 1].push_back({e, off});
            off += m.dim(m.q.alpha_source(e));
        }
    }
    return lay;
}

inline bool in_alpha_form(const Representation& m, const AlphaLayout& lay) {
    for (int v = 1; v <= m.q.n; ++v) {
        for (auto [e, off] : lay.offsets[v - 1]) {
            const RationalMatrix& a = m.alpha[e - 1];
            int s = m.dim(m.q.alpha_source(e));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < s; ++j)
                    if (a.at(i, j) != ((i == off + j) ? 1 : 0)) return false;
        }
    }
    return true;
}

inline bool in_alpha_form(const Representation& m) { return in_alpha_form(m, stacked_layout(m)); }

// Moves a Delta-filtered representation into the R^alpha slice: every alpha
// becomes the prescribed coordinate inclusion. Walks vertices in alpha
// topological order, picking at each vertex the basis whose designated rows
// carry the incoming alpha images and completing with standard basis vectors.
inline Representation normalize_alpha(const Representation& m0, const AlphaLayout& lay) {
    Representation m = m0;
    for (int v : detail::alpha_topological_order(m.q)) {
        const int d = m.dim(v);
        if (d == 0) continue;
        RationalMatrix t(d, d);
        std::vector<bool> col_used(d, false);
        int placed = 0;
        for (auto [e, off] : lay.offsets[v - 1]) {
            const RationalMatrix& a = m.alpha[e - 1];
            for (int j = 0; j < a.cols(); ++j) {
                for (int i = 0; i < d; ++i) t.at(i, off + j) = a.at(i, j);
                col_used[off + j] = true;
                ++placed;
            }
        }
        // complete with standard basis vectors at the unused column slots
        std::vector<int> free_cols;
        for (int i = 0; i < d; ++i)
            if (!col_used[i]) free_cols.push_back(i);
        int next = 0;
        for (int k = 0; k < d && next < static_cast<int>(free_cols.size()); ++k) {
            t.at(k, free_cols[next]) = 1;
            if (rank(t) == placed + next + 1)
                ++next;
            else
                t.at(k, free_cols[next]) = 0;
        }
        if (next != static_cast<int>(free_cols.size()) || rank(t) != d)
            throw std::invalid_argument("normalize_alpha: incoming alpha images not independent");
        detail::rebase_vertex(m, v, t);
    }
    if (!in_alpha_form(m, lay)) throw std::logic_error("normalize_alpha: postcondition failed");
    return m;
}

inline Representation normalize_alpha(const Representation& m) {
    return normalize_alpha(m, stacked_layout(m));
}

} // namespace seaweed
