// Shared test fixtures: an independent reduced-row-echelon oracle (plain
// Gauss-Jordan over rationals, no fraction-free tricks), deterministic random
// generators, and the running A5 example quiver.
#pragma once

#include <seaweed/hom.hpp>
#include <seaweed/matrix.hpp>
#include <seaweed/quiver.hpp>
#include <seaweed/representation.hpp>

#include <random>
#include <vector>

namespace testsupport {

using seaweed::Rational;
using seaweed::RationalMatrix;
using seaweed::TypeAQuiver;

// Textbook Gauss-Jordan; deliberately independent of the Bareiss code path.
struct Rref {
    RationalMatrix m;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline Rref rref(RationalMatrix a) {
    Rref out{a, {}};
    RationalMatrix& m = out.m;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rational p = m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

inline int rref_rank(const RationalMatrix& a) { return rref(a).rank(); }

// the quiver 1 <- 2 -> 3 -> 4 <- 5
inline TypeAQuiver example_a5() { return TypeAQuiver::parse_orientation("<,>,>,<"); }

inline RationalMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = Rational(static_cast<long>(lo + static_cast<long long>(rng() % (hi - lo + 1))));
    return m;
}

// product of random unitriangular matrices: integer entries, determinant 1
inline RationalMatrix random_unimodular(std::mt19937_64& rng, int n, int passes = 2) {
    RationalMatrix t = RationalMatrix::identity(n);
    for (int p = 0; p < passes; ++p) {
        RationalMatrix u = RationalMatrix::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((p % 2 == 0 && i < j) || (p % 2 == 1 && i > j))
                    u.at(i, j) = Rational(static_cast<long>(static_cast<long long>(rng() % 5) - 2));
        t = t * u;
    }
    return t;
}

inline TypeAQuiver random_quiver(std::mt19937_64& rng, int max_vertices, bool allow_absent = false) {
    int n = 1 + static_cast<int>(rng() % max_vertices);
    std::vector<seaweed::EdgeDir> dirs;
    for (int e = 0; e < n - 1; ++e) {
        unsigned r = static_cast<unsigned>(rng() % (allow_absent ? 5 : 2));
        dirs.push_back(r == 0 ? seaweed::EdgeDir::left
                       : r == 4 ? seaweed::EdgeDir::absent
                                : seaweed::EdgeDir::right);
    }
    return TypeAQuiver(n, dirs);
}

inline std::vector<int> random_delta_vector(std::mt19937_64& rng, int n, int max_entry) {
    std::vector<int> d(n);
    for (int& x : d) x = static_cast<int>(rng() % (max_entry + 1));
    return d;
}

// A random point of the R^alpha slice with the given Delta-dimension vector.
// The alphas are the standard inclusions; the relations are then linear in
// the beta entries (each generator term contains exactly one beta), so the
// slice is the kernel of a linear system and a random point is a random
// integer combination of a kernel basis. Every point is Delta-filtered.
inline seaweed::Representation random_alpha_slice_point(std::mt19937_64& rng, const TypeAQuiver& q,
                                                        const std::vector<int>& delta,
                                                        int coeff_range = 3) {
    using namespace seaweed;
    std::vector<int> dims(q.n, 0);
    for (int v : seaweed::detail::alpha_topological_order(q)) {
        int x = delta[v - 1];
        for (int e : q.edges_into(v)) x += dims[q.alpha_source(e) - 1];
        dims[v - 1] = x;
    }
    Representation m(q, dims);
    AlphaLayout lay = stacked_layout(m);
    for (int v = 1; v <= q.n; ++v)
        for (auto [e, off] : lay.offsets[v - 1])
            for (int j = 0; j < m.dim(q.alpha_source(e)); ++j) m.alpha[e - 1].at(off + j, j) = 1;

    std::vector<int> boff(q.n > 1 ? q.n - 1 : 0, 0);
    int unknowns = 0;
    for (int e = 1; e <= q.n - 1; ++e) {
        boff[e - 1] = unknowns;
        if (q.has_edge(e)) unknowns += m.dim(q.alpha_source(e)) * m.dim(q.alpha_target(e));
    }
    auto beta_flat = [&](ArrowRef b, int row, int col) {
        // beta matrix has cols = dim(source_of(b))
        return boff[b.edge - 1] + row * m.dim(q.source_of(b)) + col;
    };

    auto rels = build_relations(q);
    int rows = 0;
    for (const auto& r : rels) rows += m.dim(r.target) * m.dim(r.source);
    RationalMatrix sys(rows, unknowns);
    int row0 = 0;
    for (const auto& r : rels) {
        for (const auto& term : r.terms) {
            Rational c(term.sign);
            if (term.inner.beta) {
                // alpha_outer * beta_inner: entry (i,j) = sum_k A[i][k] B[k][j]
                const RationalMatrix& a = m.arrow(term.outer);
                for (int i = 0; i < m.dim(r.target); ++i)
                    for (int k = 0; k < a.cols(); ++k)
                        if (a.at(i, k) != 0)
                            for (int j = 0; j < m.dim(r.source); ++j)
                                sys.at(row0 + i * m.dim(r.source) + j,
                                       beta_flat(term.inner, k, j)) += c * a.at(i, k);
            } else {
                // beta_outer * alpha_inner: entry (i,j) = sum_k B[i][k] A[k][j]
                const RationalMatrix& a = m.arrow(term.inner);
                for (int k = 0; k < a.rows(); ++k)
                    for (int j = 0; j < m.dim(r.source); ++j)
                        if (a.at(k, j) != 0)
                            for (int i = 0; i < m.dim(r.target); ++i)
                                sys.at(row0 + i * m.dim(r.source) + j,
                                       beta_flat(term.outer, i, k)) += c * a.at(k, j);
            }
        }
        row0 += m.dim(r.target) * m.dim(r.source);
    }

    RationalMatrix kern = kernel_basis(sys);
    std::vector<Rational> flat(unknowns, Rational(0));
    for (int c = 0; c < kern.cols(); ++c) {
        long w = static_cast<long>(static_cast<long long>(rng() % (2 * coeff_range + 1)) - coeff_range);
        if (w == 0) continue;
        for (int i = 0; i < unknowns; ++i) flat[i] += Rational(w) * kern.at(i, c);
    }
    for (int e = 1; e <= q.n - 1; ++e) {
        if (!q.has_edge(e)) continue;
        ArrowRef b{e, true};
        for (int i = 0; i < m.dim(q.target_of(b)); ++i)
            for (int j = 0; j < m.dim(q.source_of(b)); ++j)
                m.beta[e - 1].at(i, j) = flat[beta_flat(b, i, j)];
    }
    if (!check_relations(m)) throw std::logic_error("random_alpha_slice_point: relations violated");
    return m;
}

} // namespace testsupport
