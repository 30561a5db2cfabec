// Exact rational linear algebra: dense matrices over Q with fraction-free
// (Bareiss) elimination. Everything downstream certifies results through
// rank / kernel / solve on these matrices, so no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seaweed {

using Rational = mpq_class;
using BigInt = mpz_class;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    RationalMatrix operator+(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        RationalMatrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    RationalMatrix operator-(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
        RationalMatrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    RationalMatrix operator*(const Rational& c) const {
        RationalMatrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    // copies src into this with top-left corner at (r0, c0)
    void paste(int r0, int c0, const RationalMatrix& src) {
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j) at(r0 + i, c0 + j) = src.at(i, j);
    }

    RationalMatrix block(int r0, int c0, int nrows, int ncols) const {
        RationalMatrix b(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) b.at(i, j) = at(r0 + i, c0 + j);
        return b;
    }

    RationalMatrix column(int j) const { return block(0, j, rows_, 1); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    RationalMatrix r(a.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(0, a.cols(), b);
    return r;
}

inline RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
    RationalMatrix r(a.rows() + b.rows(), a.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), 0, b);
    return r;
}

inline RationalMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(static_cast<long>(rows[i][j]));
    }
    return m;
}

namespace detail {

struct int64_overflow {};

inline long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw int64_overflow{};
    return r;
}
inline long long chk_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw int64_overflow{};
    return r;
}

template <class T>
struct scalar_ops;

template <>
struct scalar_ops<long long> {
    static long long cross(long long piv, long long a, long long b, long long c, long long prev) {
        // (piv*a - b*c) / prev, division exact
        return chk_sub(chk_mul(piv, a), chk_mul(b, c)) / prev;
    }
    static bool abs_less(long long a, long long b) {
        unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : a;
        unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b) : b;
        return ua < ub;
    }
};

template <>
struct scalar_ops<BigInt> {
    static BigInt cross(const BigInt& piv, const BigInt& a, const BigInt& b, const BigInt& c,
                        const BigInt& prev) {
        BigInt r = piv * a - b * c;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), prev.get_mpz_t());
        return q;
    }
    static bool abs_less(const BigInt& a, const BigInt& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
};

template <class T>
struct Echelon {
    int rows = 0, cols = 0;
    std::vector<T> a;            // row-major; rows >= rank are zero in the pivoted range
    std::vector<int> pivot_cols; // ascending
    int rank() const { return static_cast<int>(pivot_cols.size()); }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Fraction-free Gaussian elimination (Bareiss) with row pivoting by smallest
// absolute value. Pivots are only sought in columns < pivot_limit, which lets
// solve() run on an augmented matrix.
template <class T>
Echelon<T> fraction_free_echelon(std::vector<T> a, int rows, int cols, int pivot_limit) {
    Echelon<T> res;
    res.rows = rows;
    res.cols = cols;
    auto idx = [cols](int i, int j) { return static_cast<size_t>(i) * cols + j; };
    int r = 0;
    T prev = T(1);
    for (int c = 0; c < pivot_limit && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[idx(i, c)] == 0) continue;
            if (pr < 0 || scalar_ops<T>::abs_less(a[idx(i, c)], a[idx(pr, c)])) pr = i;
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(a[idx(r, j)], a[idx(pr, j)]);
        const T piv = a[idx(r, c)];
        for (int i = r + 1; i < rows; ++i) {
            const T head = a[idx(i, c)];
            for (int j = c + 1; j < cols; ++j)
                a[idx(i, j)] = scalar_ops<T>::cross(piv, a[idx(i, j)], head, a[idx(r, j)], prev);
            a[idx(i, c)] = T(0);
        }
        prev = piv;
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.a = std::move(a);
    return res;
}

// Clears denominators row by row; row scaling preserves rank, kernels and
// solution sets.
inline std::vector<BigInt> integer_rows(const RationalMatrix& m) {
    std::vector<BigInt> z(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const BigInt& d = m.at(i, j).get_den();
            l = lcm(l, d);
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            z[static_cast<size_t>(i) * m.cols() + j] = x.get_num() * (l / x.get_den());
        }
    }
    return z;
}

inline bool fits_int64(const std::vector<BigInt>& z) {
    for (const auto& x : z) {
        if (!x.fits_slong_p()) return false;
        long v = x.get_si();
        if (v > (1LL << 62) || v < -(1LL << 62)) return false;
    }
    return true;
}

// Runs the echelon computation on int64 when the input fits, falling back to
// GMP integers if anything overflows.
inline Echelon<BigInt> echelon_of(const RationalMatrix& m, int pivot_limit) {
    std::vector<BigInt> z = integer_rows(m);
    if (fits_int64(z)) {
        std::vector<long long> fast(z.size());
        for (size_t i = 0; i < z.size(); ++i) fast[i] = z[i].get_si();
        try {
            Echelon<long long> e = fraction_free_echelon(std::move(fast), m.rows(), m.cols(), pivot_limit);
            Echelon<BigInt> out;
            out.rows = e.rows;
            out.cols = e.cols;
            out.pivot_cols = e.pivot_cols;
            out.a.resize(e.a.size());
            for (size_t i = 0; i < e.a.size(); ++i) out.a[i] = BigInt(static_cast<long>(e.a[i]));
            return out;
        } catch (const int64_overflow&) {
            // fall through to exact big-integer path
        }
        z = integer_rows(m);
    }
    return fraction_free_echelon(std::move(z), m.rows(), m.cols(), pivot_limit);
}

// Scales a rational column to a primitive integer vector. The scale factor
// is positive, so entry signs are preserved.
inline void make_primitive(std::vector<Rational>& v) {
    BigInt l = 1, g = 0;
    for (const auto& x : v) l = lcm(l, x.get_den());
    for (const auto& x : v) g = gcd(g, BigInt(x.get_num() * (l / x.get_den())));
    if (g == 0) return;
    Rational scale(l, g);
    scale.canonicalize();
    for (auto& x : v) x *= scale;
}

} // namespace detail

// Exact rank over Q.
inline int rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::echelon_of(m, m.cols()).rank();
}

// Basis of the right null space as matrix columns; column count is
// cols - rank. Columns are primitive integer vectors.
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
    const int n = m.cols();
    if (n == 0) return RationalMatrix(0, 0);
    if (m.rows() == 0) return RationalMatrix::identity(n);
    auto e = detail::echelon_of(m, n);
    const int r = e.rank();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    RationalMatrix k(n, n - r);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[f] = 1;
        for (int row = r - 1; row >= 0; --row) {
            int c = e.pivot_cols[row];
            Rational s(0);
            for (int j = c + 1; j <= f; ++j) {
                if (x[j] != 0 && e.at(row, j) != 0) s += Rational(e.at(row, j)) * x[j];
            }
            x[c] = -s / Rational(e.at(row, c));
        }
        detail::make_primitive(x);
        for (int i = 0; i < n; ++i) k.at(i, out) = x[i];
        ++out;
    }
    return k;
}

// Some x with a*x = b if the system is consistent (free variables set to 0).
inline std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const int n = a.cols(), k = b.cols();
    auto e = detail::echelon_of(hstack(a, b), n);
    const int r = e.rank();
    for (int i = r; i < e.rows; ++i)
        for (int j = n; j < n + k; ++j)
            if (e.at(i, j) != 0) return std::nullopt;
    RationalMatrix x(n, k);
    for (int col = 0; col < k; ++col) {
        for (int row = r - 1; row >= 0; --row) {
            int c = e.pivot_cols[row];
            Rational s = Rational(e.at(row, n + col));
            for (int j = c + 1; j < n; ++j)
                if (x.at(j, col) != 0 && e.at(row, j) != 0) s -= Rational(e.at(row, j)) * x.at(j, col);
            x.at(c, col) = s / Rational(e.at(row, c));
        }
    }
    return x;
}

// dim(Im a  ∩  Im b) = rank(a) + rank(b) - rank([a | b])
inline int image_intersection_dim(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("image_intersection_dim: row mismatch");
    return rank(a) + rank(b) - rank(hstack(a, b));
}

inline RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    // [m | I] is consistent exactly when m has full rank
    auto x = solve(m, RationalMatrix::identity(m.rows()));
    if (!x) throw std::invalid_argument("inverse: singular matrix");
    return *x;
}

} // namespace seaweed
