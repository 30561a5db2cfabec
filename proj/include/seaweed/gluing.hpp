// Gluing of Delta-filtered modules at an admissible vertex (pullback at a
// sink, pushout at a source), the inverse splitting, and the three orders
// >=_i: combinatorial on support sets inside one linearly oriented segment,
// the segment-wise extension for glued modules, and the semantic definition
// through surjectivity of a restriction map on Hom spaces.
#pragma once

#include "hom.hpp"
#include "representation.hpp"

#include <algorithm>
#include <optional>

namespace seaweed {

enum class GlueKind { source_glue, sink_glue };

inline GlueKind glue_kind_at(const TypeAQuiver& q, int i) {
    if (q.is_source(i)) return GlueKind::source_glue;
    if (q.is_sink(i)) return GlueKind::sink_glue;
    throw std::invalid_argument("vertex is not admissible");
}

namespace detail {

// per-vertex column bases of a subrepresentation
using SubspaceFamily = std::vector<RationalMatrix>;

inline RationalMatrix column_space_basis(const RationalMatrix& m) {
    RationalMatrix b(m.rows(), 0);
    int r = 0;
    for (int j = 0; j < m.cols(); ++j) {
        RationalMatrix c = hstack(b, m.column(j));
        if (rank(c) > r) {
            b = c;
            ++r;
        }
    }
    return b;
}

// smallest per-vertex subspace family containing the seeds and closed under
// every alpha and beta map
inline SubspaceFamily closure(const Representation& m, SubspaceFamily s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 1; e <= m.q.n - 1; ++e) {
            if (!m.q.has_edge(e)) continue;
            for (ArrowRef g : {ArrowRef{e, false}, ArrowRef{e, true}}) {
                int sv = m.q.source_of(g), tv = m.q.target_of(g);
                if (s[sv - 1].cols() == 0) continue;
                RationalMatrix img = m.arrow(g) * s[sv - 1];
                RationalMatrix joined = column_space_basis(hstack(s[tv - 1], img));
                if (joined.cols() > s[tv - 1].cols()) {
                    s[tv - 1] = joined;
                    changed = true;
                }
            }
        }
    }
    return s;
}

// the subrepresentation carried by a closed family, in the basis it provides
inline Representation restrict_to(const Representation& m, const SubspaceFamily& s) {
    std::vector<int> dims(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) dims[v - 1] = s[v - 1].cols();
    Representation r(m.q, dims);
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        for (ArrowRef g : {ArrowRef{e, false}, ArrowRef{e, true}}) {
            int sv = m.q.source_of(g), tv = m.q.target_of(g);
            auto x = solve(s[tv - 1], m.arrow(g) * s[sv - 1]);
            if (!x) throw std::logic_error("restrict_to: family not closed under arrows");
            r.arrow(g) = *x;
        }
    }
    return r;
}

// the quotient of m by a closed family, in the coordinates of a complement
inline Representation quotient_by(const Representation& m, const SubspaceFamily& s) {
    std::vector<RationalMatrix> proj(m.q.n), sect(m.q.n);
    std::vector<int> dims(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        const int d = m.dim(v), k = s[v - 1].cols();
        dims[v - 1] = d - k;
        RationalMatrix t(d, d);
        t.paste(0, 0, s[v - 1]);
        int placed = k;
        for (int row = 0; row < d && placed < d; ++row) {
            t.at(row, placed) = 1;
            if (rank(t) == placed + 1)
                ++placed;
            else
                t.at(row, placed) = 0;
        }
        if (placed < d) throw std::logic_error("quotient_by: could not complete basis");
        RationalMatrix tinv = inverse(t);
        proj[v - 1] = tinv.block(k, 0, d - k, d);
        sect[v - 1] = t.block(0, k, d, d - k);
    }
    Representation r(m.q, dims);
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        for (ArrowRef g : {ArrowRef{e, false}, ArrowRef{e, true}}) {
            int sv = m.q.source_of(g), tv = m.q.target_of(g);
            r.arrow(g) = proj[tv - 1] * m.arrow(g) * sect[sv - 1];
        }
    }
    return r;
}

// columns of the embedding Delta(i)^c -> m at every vertex: alpha-path images
// of the full space at i (dim m_i must equal c, which holds at a source with
// Delta-multiplicity c)
inline SubspaceFamily verma_power_embedding(const Representation& m, int i) {
    SubspaceFamily f(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) f[v - 1] = RationalMatrix(m.dim(v), 0);
    f[i - 1] = RationalMatrix::identity(m.dim(i));
    // walk alpha-paths outward from i
    std::vector<int> stack{i};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : m.q.edges_out_of(v)) {
            int t = m.q.alpha_target(e);
            if (f[t - 1].cols() > 0) continue;
            f[t - 1] = m.alpha[e - 1] * f[v - 1];
            stack.push_back(t);
        }
    }
    return f;
}

// functional(s) cutting out the canonical quotient m ->> Delta(i)^c at a sink
// i: a basis of the annihilator of the images of all arrows arriving at i
inline RationalMatrix sink_top_projection(const Representation& m, int i) {
    RationalMatrix juxt(m.dim(i), 0);
    for (int e : m.q.edges_into(i)) juxt = hstack(juxt, m.alpha[e - 1]);
    for (int e : m.q.edges_out_of(i)) juxt = hstack(juxt, m.beta[e - 1]); // betas arriving at i
    return kernel_basis(juxt.transpose()).transpose(); // rows span the annihilator
}

} // namespace detail

// Glues two Delta-filtered modules at an admissible vertex i. The inputs must
// have Delta-support left resp. right of i and the same Delta-multiplicity
// c > 0 at i; the result is Delta-filtered with the Delta-dimension vectors
// added and c copies of the unit at i removed, returned in R^alpha form.
inline Representation glue_at(const Representation& m1, const Representation& m2, int i,
                              GlueKind kind) {
    if (!(m1.q == m2.q)) throw std::invalid_argument("glue_at: different quivers");
    const TypeAQuiver& q = m1.q;
    q.check_vertex(i);
    if (kind == GlueKind::source_glue && !q.is_source(i))
        throw std::invalid_argument("glue_at: vertex is not a source");
    if (kind == GlueKind::sink_glue && !q.is_sink(i))
        throw std::invalid_argument("glue_at: vertex is not a sink");
    auto d1 = delta_dim(m1), d2 = delta_dim(m2);
    for (int v = 1; v <= q.n; ++v) {
        if (v > i && d1[v - 1] != 0)
            throw std::invalid_argument("glue_at: left factor has Delta-support beyond the vertex");
        if (v < i && d2[v - 1] != 0)
            throw std::invalid_argument("glue_at: right factor has Delta-support before the vertex");
    }
    const int c = d1[i - 1];
    if (c != d2[i - 1] || c <= 0)
        throw std::invalid_argument("glue_at: mismatched Delta-multiplicity at the gluing vertex");
    if (!is_delta_filtered(m1) || !is_delta_filtered(m2))
        throw std::invalid_argument("glue_at: inputs must be Delta-filtered");

    Representation d = direct_sum(m1, m2);
    Representation glued;
    if (kind == GlueKind::sink_glue) {
        RationalMatrix f1 = detail::sink_top_projection(m1, i);
        RationalMatrix f2 = detail::sink_top_projection(m2, i);
        if (f1.rows() != c || f2.rows() != c)
            throw std::logic_error("glue_at: sink top dimension mismatch");
        detail::SubspaceFamily fam(q.n);
        for (int v = 1; v <= q.n; ++v)
            fam[v - 1] = v == i ? kernel_basis(hstack(f1, f2 * Rational(-1)))
                                : RationalMatrix::identity(d.dim(v));
        glued = detail::restrict_to(d, fam);
    } else {
        detail::SubspaceFamily j1 = detail::verma_power_embedding(m1, i);
        detail::SubspaceFamily j2 = detail::verma_power_embedding(m2, i);
        detail::SubspaceFamily fam(q.n);
        for (int v = 1; v <= q.n; ++v)
            fam[v - 1] = vstack(j1[v - 1], j2[v - 1] * Rational(-1));
        glued = detail::quotient_by(d, fam);
    }
    glued = normalize_alpha(glued);
    if (!is_delta_filtered(glued)) throw std::logic_error("glue_at: result is not Delta-filtered");
    auto dg = delta_dim(glued);
    for (int v = 1; v <= q.n; ++v) {
        int want = d1[v - 1] + d2[v - 1] - (v == i ? c : 0);
        if (dg[v - 1] != want) throw std::logic_error("glue_at: Delta-dimension bookkeeping failed");
    }
    return glued;
}

// Splits a Delta-filtered module at an admissible vertex into factors
// supported left and right of it, inverse to glue_at up to isomorphism.
inline std::pair<Representation, Representation> split_at(const Representation& m, int i) {
    const TypeAQuiver& q = m.q;
    q.check_vertex(i);
    if (!q.is_admissible(i)) throw std::invalid_argument("split_at: vertex not admissible");
    if (!is_delta_filtered(m)) throw std::invalid_argument("split_at: input not Delta-filtered");
    auto dd = delta_dim(m);
    const int c = dd[i - 1];
    if (c == 0) throw std::invalid_argument("split_at: zero Delta-multiplicity at the vertex");

    Representation left, right;
    if (q.is_source(i)) {
        // preimages of the two support halves of coker(Delta(i)^c -> m)
        detail::SubspaceFamily seed(q.n);
        for (int v = 1; v <= q.n; ++v)
            seed[v - 1] = v == i ? RationalMatrix::identity(m.dim(v)) : RationalMatrix(m.dim(v), 0);
        detail::SubspaceFamily sub = detail::closure(m, seed);
        detail::SubspaceFamily fleft(q.n), fright(q.n);
        for (int v = 1; v <= q.n; ++v) {
            fleft[v - 1] = v < i ? RationalMatrix::identity(m.dim(v)) : sub[v - 1];
            fright[v - 1] = v > i ? RationalMatrix::identity(m.dim(v)) : sub[v - 1];
        }
        left = detail::restrict_to(m, fleft);
        right = detail::restrict_to(m, fright);
    } else {
        // quotients by the submodules generated by the far sides
        detail::SubspaceFamily seedl(q.n), seedr(q.n);
        for (int v = 1; v <= q.n; ++v) {
            seedl[v - 1] = v < i ? RationalMatrix::identity(m.dim(v)) : RationalMatrix(m.dim(v), 0);
            seedr[v - 1] = v > i ? RationalMatrix::identity(m.dim(v)) : RationalMatrix(m.dim(v), 0);
        }
        left = detail::quotient_by(m, detail::closure(m, seedr));
        right = detail::quotient_by(m, detail::closure(m, seedl));
    }
    left = normalize_alpha(left);
    right = normalize_alpha(right);
    auto dl = delta_dim(left), dr = delta_dim(right);
    for (int v = 1; v <= q.n; ++v) {
        int wl = v < i ? dd[v - 1] : v == i ? c : 0;
        int wr = v > i ? dd[v - 1] : v == i ? c : 0;
        if (dl[v - 1] != wl || dr[v - 1] != wr)
            throw std::logic_error("split_at: Delta-dimension bookkeeping failed");
    }
    if (!is_delta_filtered(left) || !is_delta_filtered(right))
        throw std::logic_error("split_at: factors not Delta-filtered");
    return {left, right};
}

// M_J >=_i M_{J'} decided combinatorially inside one linearly oriented
// segment with shared endpoint i: at a source the r-th elements of the lists
// sorted downward from i must satisfy j_r <= j'_r with |J| <= |J'|, at a sink
// the same elementwise condition with |J| >= |J'|.
inline bool linear_order_geq(const TypeAQuiver& q, std::vector<int> j, std::vector<int> j2, int i,
                             GlueKind kind) {
    auto contains = [](const std::vector<int>& s, int v) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    if (!contains(j, i) || !contains(j2, i))
        throw std::invalid_argument("linear_order_geq: vertex missing from a support set");
    auto sort_from = [&](std::vector<int>& s) {
        for (int u : s) {
            // i must be the extreme endpoint of the set in the path order
            bool inside = kind == GlueKind::source_glue ? q.geq(i, u) : q.geq(u, i);
            if (!inside)
                throw std::invalid_argument("linear_order_geq: vertex is not an endpoint of the set");
        }
        std::sort(s.begin(), s.end(), [&](int a, int b) {
            if (a == b) return false;
            if (kind == GlueKind::source_glue) return q.gt(a, b); // descending from the source
            return q.gt(b, a);                                    // ascending from the sink
        });
    };
    sort_from(j);
    sort_from(j2);
    const size_t s = j.size(), t = j2.size();
    if (kind == GlueKind::source_glue) {
        if (s > t) return false;
        for (size_t r = 0; r < s; ++r)
            if (!q.geq(j2[r], j[r])) return false; // j_r <= j2_r
        return true;
    }
    if (s < t) return false;
    for (size_t r = 0; r < t; ++r)
        if (!q.geq(j2[r], j[r])) return false;
    return true;
}

// Semantic order: at a source i, whether restriction along Delta(i) -> m hits
// every map Delta(i) -> n; at a sink, dually through the canonical quotient
// onto Delta(i). Both modules need Delta-multiplicity exactly 1 at i.
inline bool order_geq_semantic(const Representation& m, const Representation& n, int i) {
    if (!(m.q == n.q)) throw std::invalid_argument("order_geq_semantic: different quivers");
    const TypeAQuiver& q = m.q;
    if (!q.is_admissible(i)) throw std::invalid_argument("order_geq_semantic: vertex not admissible");
    if (delta_dim(m)[i - 1] != 1 || delta_dim(n)[i - 1] != 1)
        throw std::invalid_argument("order_geq_semantic: Delta-multiplicity at the vertex must be 1");
    HomBasis h = hom_basis(m, n);
    if (q.is_source(i)) {
        if (m.dim(i) != 1) throw std::logic_error("order_geq_semantic: source space not a line");
        RationalMatrix v(n.dim(i), h.dim());
        for (int b = 0; b < h.dim(); ++b)
            for (int r = 0; r < n.dim(i); ++r) v.at(r, b) = h.elements[b][i - 1].at(r, 0);
        return rank(v) == n.dim(i);
    }
    RationalMatrix w = detail::sink_top_projection(n, i);
    if (w.rows() != 1) throw std::logic_error("order_geq_semantic: sink top not a line");
    for (int b = 0; b < h.dim(); ++b)
        if (!(w * h.elements[b][i - 1]).is_zero()) return true;
    return false;
}

} // namespace seaweed
