// Seaweed subalgebras of gl_n presented by a pair of compositions of n: block
// data of the two flags, the associated type-A quiver with its dimension
// vectors, the explicit Richardson matrix read off the arrow diagram, its
// certification by an exact ad-rank computation, and the bijection between
// nilradical elements and representations on the R^alpha slice.
#pragma once

#include "builder.hpp"

#include <numeric>
#include <string>

namespace seaweed {

struct Composition {
    std::vector<int> parts;
    int n = 0;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("composition parts must be positive");
        n = std::accumulate(parts.begin(), parts.end(), 0);
        if (n == 0) throw std::invalid_argument("composition must be nonempty");
    }
};

// Block data of the seaweed attached to flags with dimension steps a (upper)
// and b (lower): breakpoints m_0 < ... < m_l merge the a-prefix sums with the
// complements of the b-prefix sums; block s spans rows/columns
// (m_{s-1}, m_s]; Y_s = E_{p(s)} + ... + E_{q(s)} is the span of the blocks a
// column of the seaweed may hit.
struct BlockData {
    int n = 0;
    int l = 0;               // number of blocks
    std::vector<int> m;      // breakpoints m_0..m_l
    std::vector<int> e;      // block sizes, index s-1
    std::vector<int> u, ell; // least flag steps containing E_s (upper / lower)
    std::vector<int> p, q;   // Y-interval per block, index s-1, 1-based block ids

    int block_of(int global) const { // global row/col in 0..n-1
        for (int s = 1; s <= l; ++s)
            if (global < m[s]) return s;
        throw std::logic_error("block_of: index out of range");
    }
    int block_offset(int s) const { return m[s - 1]; } // first global index of E_s
    int y_dim(int s) const {
        int d = 0;
        for (int t = p[s - 1]; t <= q[s - 1]; ++t) d += e[t - 1];
        return d;
    }
    bool block_in_y(int s, int t) const { return p[t - 1] <= s && s <= q[t - 1]; }
};

inline BlockData block_data(const Composition& a, const Composition& b) {
    if (a.n != b.n) throw std::invalid_argument("block_data: compositions of different integers");
    const int n = a.n;
    std::vector<int> acum{0}, bcum{0};
    for (int x : a.parts) acum.push_back(acum.back() + x);
    for (int x : b.parts) bcum.push_back(bcum.back() + x);
    std::vector<int> marks;
    for (int x : acum) marks.push_back(x);
    for (int x : bcum) marks.push_back(n - x);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

    BlockData bd;
    bd.n = n;
    bd.m = marks;
    bd.l = static_cast<int>(marks.size()) - 1;
    for (int s = 1; s <= bd.l; ++s) bd.e.push_back(bd.m[s] - bd.m[s - 1]);
    for (int s = 1; s <= bd.l; ++s) {
        // u(s): least flag step of a containing E_s; V_{u(s)} = blocks 1..q(s)
        int u = 0;
        while (acum[u] < bd.m[s]) ++u;
        int qq = 1;
        while (bd.m[qq] < acum[u]) ++qq;
        // ell(s): least flag step of b containing E_s from below
        int ell = 0;
        while (n - bcum[ell] > bd.m[s - 1]) ++ell;
        int pp = 1;
        while (bd.m[pp - 1] < n - bcum[ell]) ++pp;
        bd.u.push_back(u);
        bd.ell.push_back(ell);
        bd.p.push_back(pp);
        bd.q.push_back(qq);
        if (!(pp <= s && s <= qq)) throw std::logic_error("block_data: E_s not inside Y_s");
    }
    return bd;
}

// The quiver of the seaweed: Y_s sits strictly inside Y_{s+1} when the lower
// flag index stays put, and conversely when the upper one does; when both
// indices jump the Y-spaces meet trivially and the edge is absent.
inline TypeAQuiver seaweed_quiver(const BlockData& bd) {
    std::vector<EdgeDir> dirs;
    for (int s = 1; s < bd.l; ++s) {
        bool lower_stays = bd.ell[s - 1] == bd.ell[s]; // then E_s in Y_{s+1}
        bool upper_stays = bd.u[s - 1] == bd.u[s];     // then E_{s+1} in Y_s
        if (lower_stays && upper_stays) throw std::logic_error("seaweed_quiver: Y_s = Y_{s+1}");
        if (lower_stays)
            dirs.push_back(EdgeDir::right);
        else if (upper_stays)
            dirs.push_back(EdgeDir::left);
        else
            dirs.push_back(EdgeDir::absent);
    }
    return TypeAQuiver(bd.l, dirs);
}

inline int dim_q(const BlockData& bd) {
    int d = 0;
    for (int t = 1; t <= bd.l; ++t) d += bd.e[t - 1] * bd.y_dim(t);
    return d;
}
inline int dim_l(const BlockData& bd) {
    int d = 0;
    for (int t = 1; t <= bd.l; ++t) d += bd.e[t - 1] * bd.e[t - 1];
    return d;
}
inline int dim_n(const BlockData& bd) { return dim_q(bd) - dim_l(bd); }

// x lies in the nilpotent radical iff its support sits in the off-diagonal
// blocks allowed by the column pattern: entry blocks (s,t) with E_s in Y_t
// and s != t.
inline bool is_in_nilradical(const RationalMatrix& x, const BlockData& bd) {
    if (x.rows() != bd.n || x.cols() != bd.n)
        throw std::invalid_argument("is_in_nilradical: wrong matrix size");
    for (int r = 0; r < bd.n; ++r)
        for (int c = 0; c < bd.n; ++c) {
            if (x.at(r, c) == 0) continue;
            int s = bd.block_of(r), t = bd.block_of(c);
            if (s == t || !bd.block_in_y(s, t)) return false;
        }
    return true;
}

namespace detail {

// ordered matrix-unit bases: blocks in (row-block, col-block) lexicographic
// order, row-major inside each block
inline std::vector<std::pair<int, int>> unit_basis(const BlockData& bd, bool include_diagonal) {
    std::vector<std::pair<int, int>> units;
    for (int s = 1; s <= bd.l; ++s)
        for (int t = 1; t <= bd.l; ++t) {
            if (!bd.block_in_y(s, t)) continue;
            if (!include_diagonal && s == t) continue;
            for (int i = 0; i < bd.e[s - 1]; ++i)
                for (int j = 0; j < bd.e[t - 1]; ++j)
                    units.push_back({bd.block_offset(s) + i, bd.block_offset(t) + j});
        }
    return units;
}

} // namespace detail

// exact rank of ad x : q -> n over the pinned matrix-unit bases
inline int ad_rank(const RationalMatrix& x, const BlockData& bd) {
    if (!is_in_nilradical(x, bd)) throw std::invalid_argument("ad_rank: x is not in the nilradical");
    auto qunits = detail::unit_basis(bd, true);
    auto nunits = detail::unit_basis(bd, false);
    std::vector<int> ncoord(static_cast<size_t>(bd.n) * bd.n, -1);
    for (size_t k = 0; k < nunits.size(); ++k)
        ncoord[static_cast<size_t>(nunits[k].first) * bd.n + nunits[k].second] =
            static_cast<int>(k);
    RationalMatrix admat(static_cast<int>(nunits.size()), static_cast<int>(qunits.size()));
    for (size_t col = 0; col < qunits.size(); ++col) {
        auto [u, v] = qunits[col];
        // [x, E_uv] = x E_uv - E_uv x : column u of x lands in column v, and
        // minus row v of x spreads along row u
        for (int r = 0; r < bd.n; ++r) {
            if (x.at(r, u) == 0) continue;
            int k = ncoord[static_cast<size_t>(r) * bd.n + v];
            if (k < 0) throw std::logic_error("ad_rank: bracket leaves the nilradical");
            admat.at(k, static_cast<int>(col)) += x.at(r, u);
        }
        for (int c = 0; c < bd.n; ++c) {
            if (x.at(v, c) == 0) continue;
            int k = ncoord[static_cast<size_t>(u) * bd.n + c];
            if (k < 0) throw std::logic_error("ad_rank: bracket leaves the nilradical");
            admat.at(k, static_cast<int>(col)) -= x.at(v, c);
        }
    }
    return rank(admat);
}

inline int stabilizer_dim(const RationalMatrix& x, const BlockData& bd) {
    return dim_q(bd) - ad_rank(x, bd);
}

// The explicit Richardson element: draw the arrow diagram of M(e) over the
// seaweed quiver, reverse every double arrow, number nodes column-wise from
// the left and bottom to top, and put a 1 at each resulting arrow.
inline RationalMatrix richardson_matrix(const BlockData& bd) {
    TypeAQuiver q = seaweed_quiver(bd);
    ArrowDiagram dia = arrow_diagram(bd.e, q);
    RationalMatrix x(bd.n, bd.n);
    for (const auto& edge : dia.edges)
        x.at(dia.nodes[edge.to].number - 1, dia.nodes[edge.from].number - 1) = 1;
    return x;
}

struct SeaweedReport {
    Composition a, b;
    BlockData bd;
    TypeAQuiver quiver;
    std::vector<int> e; // Delta-dimension vector = block sizes
    std::vector<int> d; // dim Y per block
    int dim_q = 0, dim_l = 0, dim_n = 0;
    RationalMatrix richardson;
    int ad_rank = 0;
    bool verified = false;
};

inline SeaweedReport verify_richardson(const Composition& a, const Composition& b) {
    SeaweedReport rep;
    rep.a = a;
    rep.b = b;
    rep.bd = block_data(a, b);
    rep.quiver = seaweed_quiver(rep.bd);
    rep.e = rep.bd.e;
    for (int s = 1; s <= rep.bd.l; ++s) rep.d.push_back(rep.bd.y_dim(s));
    rep.dim_q = dim_q(rep.bd);
    rep.dim_l = dim_l(rep.bd);
    rep.dim_n = dim_n(rep.bd);
    rep.richardson = richardson_matrix(rep.bd);
    rep.ad_rank = ad_rank(rep.richardson, rep.bd);
    rep.verified = rep.ad_rank == rep.dim_n;
    return rep;
}

// Layout of the R^alpha slice in seaweed coordinates: the space at vertex v
// is Y_v with its blocks E_{p(v)},...,E_{q(v)} stacked in order, and each
// alpha is the block-coordinate inclusion Y_s into Y_t.
inline AlphaLayout seaweed_layout(const BlockData& bd, const TypeAQuiver& q) {
    AlphaLayout lay;
    lay.offsets.resize(q.n);
    for (int v = 1; v <= q.n; ++v) {
        for (int edge : q.edges_into(v)) {
            int s = q.alpha_source(edge);
            // offset of block p(s) inside Y_v
            int off = 0;
            for (int t = bd.p[v - 1]; t < bd.p[s - 1]; ++t) off += bd.e[t - 1];
            lay.offsets[v - 1].push_back({edge, off});
        }
    }
    return lay;
}

// the map Phi: a nilradical element to the representation with spaces Y_v,
// alpha the canonical inclusions, beta the block submatrices of x
inline Representation rep_from_nilpotent(const RationalMatrix& x, const BlockData& bd) {
    if (!is_in_nilradical(x, bd))
        throw std::invalid_argument("rep_from_nilpotent: x is not in the nilradical");
    TypeAQuiver q = seaweed_quiver(bd);
    std::vector<int> dims;
    for (int v = 1; v <= q.n; ++v) dims.push_back(bd.y_dim(v));
    Representation m(q, dims);
    auto y_offset = [&](int v, int block) { // offset of E_block inside Y_v
        int off = 0;
        for (int t = bd.p[v - 1]; t < block; ++t) off += bd.e[t - 1];
        return off;
    };
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        int s = q.alpha_source(e), t = q.alpha_target(e);
        for (int blk = bd.p[s - 1]; blk <= bd.q[s - 1]; ++blk)
            for (int i = 0; i < bd.e[blk - 1]; ++i)
                m.alpha[e - 1].at(y_offset(t, blk) + i, y_offset(s, blk) + i) = 1;
        for (int rb = bd.p[s - 1]; rb <= bd.q[s - 1]; ++rb)
            for (int cb = bd.p[t - 1]; cb <= bd.q[t - 1]; ++cb)
                for (int i = 0; i < bd.e[rb - 1]; ++i)
                    for (int j = 0; j < bd.e[cb - 1]; ++j)
                        m.beta[e - 1].at(y_offset(s, rb) + i, y_offset(t, cb) + j) =
                            x.at(bd.block_offset(rb) + i, bd.block_offset(cb) + j);
    }
    if (!check_relations(m)) throw std::logic_error("rep_from_nilpotent: relations violated");
    if (!is_delta_filtered(m)) throw std::logic_error("rep_from_nilpotent: not Delta-filtered");
    return m;
}

// the inverse of Phi on the R^alpha slice in seaweed coordinates: block
// column E_t of x is cut out of the beta of any arrow arriving at t
inline RationalMatrix nilpotent_from_rep(const Representation& m, const BlockData& bd) {
    TypeAQuiver q = seaweed_quiver(bd);
    if (!(m.q == q)) throw std::invalid_argument("nilpotent_from_rep: wrong quiver");
    for (int v = 1; v <= q.n; ++v)
        if (m.dim(v) != bd.y_dim(v))
            throw std::invalid_argument("nilpotent_from_rep: dimensions differ from the Y-spaces");
    if (!in_alpha_form(m, seaweed_layout(bd, q)))
        throw std::invalid_argument("nilpotent_from_rep: representation not in seaweed R^alpha form");
    auto y_offset = [&](int v, int block) {
        int off = 0;
        for (int t = bd.p[v - 1]; t < block; ++t) off += bd.e[t - 1];
        return off;
    };
    RationalMatrix x(bd.n, bd.n);
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        int s = q.alpha_source(e), t = q.alpha_target(e);
        // beta_e : Y_t -> Y_s; its E_t column slice is block column t of x
        for (int rb = bd.p[s - 1]; rb <= bd.q[s - 1]; ++rb)
            for (int i = 0; i < bd.e[rb - 1]; ++i)
                for (int j = 0; j < bd.e[t - 1]; ++j)
                    x.at(bd.block_offset(rb) + i, bd.block_offset(t) + j) =
                        m.beta[e - 1].at(y_offset(s, rb) + i, y_offset(t, t) + j);
    }
    return x;
}

// normalizes an arbitrary representation with the Y-space dimensions into
// the seaweed layout so nilpotent_from_rep applies
inline Representation to_seaweed_form(const Representation& m, const BlockData& bd) {
    return normalize_alpha(m, seaweed_layout(bd, seaweed_quiver(bd)));
}

} // namespace seaweed
