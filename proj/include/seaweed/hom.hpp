// Hom spaces and first extension groups. hom_basis assembles the commuting
// equations over all arrows of the double quiver and reads off the kernel.
// ext1_dim uses the Euler characteristic of the projective presentation
// 0 -> P1 -> P0 -> M -> 0 (valid since Delta-filtered modules have projective
// dimension at most one); ext1_dim_oracle recomputes the same number from the
// relation-differential complex and serves as an independent cross-check.
#pragma once

#include "representation.hpp"

namespace seaweed {

struct HomBasis {
    // each element is a per-vertex family f_v : M_v -> N_v (index v-1)
    std::vector<std::vector<RationalMatrix>> elements;
    int dim() const { return static_cast<int>(elements.size()); }
};

namespace detail {

struct HomSystem {
    std::vector<int> offset; // unknown block offset per vertex (index v-1)
    int unknowns = 0;
};

inline HomSystem hom_layout(const Representation& m, const Representation& n) {
    HomSystem h;
    h.offset.resize(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        h.offset[v - 1] = h.unknowns;
        h.unknowns += n.dim(v) * m.dim(v);
    }
    return h;
}

// rows expressing N_g f_{s(g)} - f_{t(g)} M_g = 0 for one arrow g
inline void add_commuting_rows(RationalMatrix& sys, int& row, const HomSystem& h,
                               const Representation& m, const Representation& n, ArrowRef g) {
    const int s = m.q.source_of(g), t = m.q.target_of(g);
    const RationalMatrix& mg = m.arrow(g);
    const RationalMatrix& ng = n.arrow(g);
    for (int i = 0; i < n.dim(t); ++i)
        for (int j = 0; j < m.dim(s); ++j) {
            for (int k = 0; k < n.dim(s); ++k)
                if (ng.at(i, k) != 0) sys.at(row, h.offset[s - 1] + k * m.dim(s) + j) += ng.at(i, k);
            for (int l = 0; l < m.dim(t); ++l)
                if (mg.at(l, j) != 0) sys.at(row, h.offset[t - 1] + i * m.dim(t) + l) -= mg.at(l, j);
            ++row;
        }
}

} // namespace detail

inline HomBasis hom_basis(const Representation& m, const Representation& n) {
    if (!(m.q == n.q)) throw std::invalid_argument("hom_basis: different quivers");
    auto h = detail::hom_layout(m, n);
    int rows = 0;
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        rows += n.dim(m.q.alpha_target(e)) * m.dim(m.q.alpha_source(e));
        rows += n.dim(m.q.alpha_source(e)) * m.dim(m.q.alpha_target(e));
    }
    RationalMatrix sys(rows, h.unknowns);
    int row = 0;
    for (int e = 1; e <= m.q.n - 1; ++e) {
        if (!m.q.has_edge(e)) continue;
        detail::add_commuting_rows(sys, row, h, m, n, {e, false});
        detail::add_commuting_rows(sys, row, h, m, n, {e, true});
    }
    RationalMatrix k = kernel_basis(sys);
    HomBasis out;
    out.elements.resize(k.cols());
    for (int c = 0; c < k.cols(); ++c) {
        auto& fam = out.elements[c];
        fam.resize(m.q.n);
        for (int v = 1; v <= m.q.n; ++v) {
            fam[v - 1] = RationalMatrix(n.dim(v), m.dim(v));
            for (int i = 0; i < n.dim(v); ++i)
                for (int j = 0; j < m.dim(v); ++j)
                    fam[v - 1].at(i, j) = k.at(h.offset[v - 1] + i * m.dim(v) + j, c);
        }
    }
    return out;
}

inline int hom_dim(const Representation& m, const Representation& n) {
    return hom_basis(m, n).dim();
}

// multiplicity of the simple L(v) in the top of m: dim at v minus the rank of
// all arrow matrices of the double quiver arriving at v, juxtaposed
inline std::vector<int> top_dims(const Representation& m) {
    std::vector<int> p0(m.q.n);
    for (int v = 1; v <= m.q.n; ++v) {
        RationalMatrix juxt(m.dim(v), 0);
        for (int e = 1; e <= m.q.n - 1; ++e) {
            if (!m.q.has_edge(e)) continue;
            if (m.q.alpha_target(e) == v) juxt = hstack(juxt, m.alpha[e - 1]);
            if (m.q.alpha_source(e) == v) juxt = hstack(juxt, m.beta[e - 1]); // beta ends at v
        }
        p0[v - 1] = m.dim(v) - rank(juxt);
    }
    return p0;
}

// multiplicities p1 of the projectives in the syzygy, recovered from the
// dimension identity sum p1_i dimvec P(i) = sum p0_i dimvec P(i) - dimvec m
inline std::vector<int> syzygy_multiplicities(const Representation& m, const std::vector<int>& p0) {
    const int n = m.q.n;
    RationalMatrix pmat(n, n), rhs(n, 1);
    std::vector<std::vector<int>> pv(n);
    for (int v = 1; v <= n; ++v) {
        pv[v - 1] = proj_dimvec(m.q, v);
        for (int u = 0; u < n; ++u) pmat.at(u, v - 1) = pv[v - 1][u];
    }
    for (int u = 0; u < n; ++u) {
        long long b = -m.dims[u];
        for (int v = 0; v < n; ++v) b += static_cast<long long>(p0[v]) * pv[v][u];
        rhs.at(u, 0) = Rational(static_cast<long>(b));
    }
    auto x = solve(pmat, rhs);
    if (!x) throw std::invalid_argument("ext1_dim: projective multiplicity system inconsistent");
    std::vector<int> p1(n);
    for (int v = 0; v < n; ++v) {
        const Rational& c = x->at(v, 0);
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument("ext1_dim: syzygy multiplicities not nonnegative integers");
        p1[v] = static_cast<int>(c.get_num().get_si());
    }
    return p1;
}

inline int ext1_dim(const Representation& m, const Representation& n) {
    if (!is_delta_filtered(m)) throw std::invalid_argument("ext1_dim: m is not Delta-filtered");
    auto p0 = top_dims(m);
    auto p1 = syzygy_multiplicities(m, p0);
    long long e = hom_dim(m, n);
    for (int v = 1; v <= m.q.n; ++v) e -= static_cast<long long>(p0[v - 1] - p1[v - 1]) * n.dim(v);
    if (e < 0) throw std::logic_error("ext1_dim: negative result");
    return static_cast<int>(e);
}

// Independent Ext^1 computation: dim ker(rho)/im(delta) for the complex
//   (+) Hom(M_i,N_i) --delta--> (+) Hom(M_sg,N_tg) --rho--> (+) Hom(M_sr,N_tr)
// over arrows g of the double quiver and generators r of the relation ideal.
inline int ext1_dim_oracle(const Representation& m, const Representation& n) {
    if (!(m.q == n.q)) throw std::invalid_argument("ext1_dim_oracle: different quivers");
    if (!check_relations(m) || !check_relations(n))
        throw std::invalid_argument("ext1_dim_oracle: inputs violate the relation ideal");
    const TypeAQuiver& q = m.q;

    std::vector<ArrowRef> arrows;
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        arrows.push_back({e, false});
        arrows.push_back({e, true});
    }
    auto arrow_index = [&](ArrowRef a) {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i] == a) return static_cast<int>(i);
        throw std::logic_error("unknown arrow");
    };

    std::vector<int> c1_off(arrows.size());
    int c1 = 0;
    for (size_t i = 0; i < arrows.size(); ++i) {
        c1_off[i] = c1;
        c1 += n.dim(q.target_of(arrows[i])) * m.dim(q.source_of(arrows[i]));
    }
    std::vector<int> c0_off(q.n);
    int c0 = 0;
    for (int v = 1; v <= q.n; ++v) {
        c0_off[v - 1] = c0;
        c0 += n.dim(v) * m.dim(v);
    }
    auto rels = build_relations(q);
    std::vector<int> c2_off(rels.size());
    int c2 = 0;
    for (size_t i = 0; i < rels.size(); ++i) {
        c2_off[i] = c2;
        c2 += n.dim(rels[i].target) * m.dim(rels[i].source);
    }

    // delta(g)_a = g_{t(a)} M_a - N_a g_{s(a)}
    RationalMatrix dmat(c1, c0);
    for (size_t ai = 0; ai < arrows.size(); ++ai) {
        ArrowRef a = arrows[ai];
        const int s = q.source_of(a), t = q.target_of(a);
        const RationalMatrix& ma = m.arrow(a);
        const RationalMatrix& na = n.arrow(a);
        for (int i = 0; i < n.dim(t); ++i)
            for (int j = 0; j < m.dim(s); ++j) {
                int r = c1_off[ai] + i * m.dim(s) + j;
                for (int l = 0; l < m.dim(t); ++l)
                    if (ma.at(l, j) != 0) dmat.at(r, c0_off[t - 1] + i * m.dim(t) + l) += ma.at(l, j);
                for (int k = 0; k < n.dim(s); ++k)
                    if (na.at(i, k) != 0) dmat.at(r, c0_off[s - 1] + k * m.dim(s) + j) -= na.at(i, k);
            }
    }

    // rho(f)_r = sum over terms c * (outer inner) of c (N_outer f_inner + f_outer M_inner)
    RationalMatrix rmat(c2, c1);
    for (size_t ri = 0; ri < rels.size(); ++ri) {
        const Relation& rel = rels[ri];
        for (const auto& term : rel.terms) {
            ArrowRef in = term.inner, out = term.outer;
            const int c = term.sign;
            const RationalMatrix& nout = n.arrow(out);
            const RationalMatrix& min = m.arrow(in);
            const int si = q.source_of(in), ti = q.target_of(in);
            const int so = q.source_of(out), to = q.target_of(out);
            const int in_idx = arrow_index(in), out_idx = arrow_index(out);
            for (int i = 0; i < n.dim(to); ++i)
                for (int j = 0; j < m.dim(si); ++j) {
                    int r = c2_off[ri] + i * m.dim(rel.source) + j;
                    // N_out f_in : f_in has shape n.dim(ti) x m.dim(si), ti == so
                    for (int k = 0; k < n.dim(ti); ++k)
                        if (nout.at(i, k) != 0)
                            rmat.at(r, c1_off[in_idx] + k * m.dim(si) + j) += c * nout.at(i, k);
                    // f_out M_in : f_out has shape n.dim(to) x m.dim(so), so == ti
                    for (int l = 0; l < m.dim(so); ++l)
                        if (min.at(l, j) != 0)
                            rmat.at(r, c1_off[out_idx] + i * m.dim(so) + l) += c * min.at(l, j);
                }
        }
    }

    return (c1 - rank(rmat)) - rank(dmat);
}

} // namespace seaweed
