// fp.hpp -- exact dense linear algebra over the prime field F_p.
//
// All arithmetic is modular with a session-global prime modulus (default
// 10007).  Matrices are small and dense; everything is plain Gaussian
// elimination, which is exact over F_p.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dsilt {

using i64 = long long;

struct FieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace fp {

inline i64& modulus() {
    static i64 p = 10007;
    return p;
}

inline void set_modulus(i64 p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    // cheap primality check; moduli are user-supplied and small
    for (i64 q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("modulus must be prime");
    modulus() = p;
}

inline i64 norm(i64 x) {
    i64 p = modulus();
    x %= p;
    return x < 0 ? x + p : x;
}
inline i64 add(i64 a, i64 b) { return norm(a + b); }
inline i64 sub(i64 a, i64 b) { return norm(a - b); }
inline i64 mul(i64 a, i64 b) { return norm(norm(a) * norm(b)); }
inline i64 neg(i64 a) { return norm(-a); }

inline i64 pow(i64 a, i64 e) {
    a = norm(a);
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline i64 inv(i64 a) {
    a = norm(a);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, modulus() - 2);
}

}  // namespace fp

// Dense row-major matrix over F_p.
struct Mat {
    int nr = 0, nc = 0;
    std::vector<i64> a;  // size nr*nc, values in [0,p)

    Mat() = default;
    Mat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * nc + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * nc + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (i64 x : a)
            if (x != 0) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        if (nc != o.nr) throw std::logic_error("matrix shape mismatch in product");
        Mat r(nr, o.nc);
        for (int i = 0; i < nr; ++i)
            for (int k = 0; k < nc; ++k) {
                i64 v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.nc; ++j)
                    r.at(i, j) = fp::add(r.at(i, j), fp::mul(v, o.at(k, j)));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (nr != o.nr || nc != o.nc) throw std::logic_error("matrix shape mismatch in sum");
        Mat r(nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::add(a[i], o.a[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (nr != o.nr || nc != o.nc) throw std::logic_error("matrix shape mismatch in difference");
        Mat r(nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::sub(a[i], o.a[i]);
        return r;
    }

    Mat scaled(i64 c) const {
        Mat r(nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::mul(a[i], c);
        return r;
    }

    Mat transpose() const {
        Mat r(nc, nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<i64> apply(const std::vector<i64>& v) const {
        if ((int)v.size() != nc) throw std::logic_error("vector length mismatch in apply");
        std::vector<i64> r(nr, 0);
        for (int i = 0; i < nr; ++i) {
            i64 s = 0;
            for (int j = 0; j < nc; ++j) s = fp::add(s, fp::mul(at(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }
};

inline Mat hstack(const Mat& l, const Mat& r) {
    if (l.nr != r.nr) throw std::logic_error("hstack row mismatch");
    Mat m(l.nr, l.nc + r.nc);
    for (int i = 0; i < l.nr; ++i) {
        for (int j = 0; j < l.nc; ++j) m.at(i, j) = l.at(i, j);
        for (int j = 0; j < r.nc; ++j) m.at(i, l.nc + j) = r.at(i, j);
    }
    return m;
}

inline Mat vstack(const Mat& t, const Mat& b) {
    if (t.nc != b.nc) throw std::logic_error("vstack column mismatch");
    Mat m(t.nr + b.nr, t.nc);
    for (int i = 0; i < t.nr; ++i)
        for (int j = 0; j < t.nc; ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.nr; ++i)
        for (int j = 0; j < t.nc; ++j) m.at(t.nr + i, j) = b.at(i, j);
    return m;
}

// In-place reduced row echelon form; returns the pivot column of each pivot
// row, in order.  Rows below the rank come out zero.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.nc && row < m.nr; ++col) {
        int piv = -1;
        for (int r = row; r < m.nr; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(row, j));
        i64 iv = fp::inv(m.at(row, col));
        for (int j = col; j < m.nc; ++j) m.at(row, j) = fp::mul(m.at(row, j), iv);
        for (int r = 0; r < m.nr; ++r) {
            if (r == row) continue;
            i64 f = m.at(r, col);
            if (f == 0) continue;
            for (int j = col; j < m.nc; ++j)
                m.at(r, j) = fp::sub(m.at(r, j), fp::mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Mat m) { return (int)rref(m).size(); }

// Basis of the right nullspace {x : Mx = 0}, returned as columns of a matrix.
inline Mat nullspace(Mat m) {
    int nc = m.nc;
    std::vector<int> piv = rref(m);
    std::vector<int> pivot_of_col(nc, -1);
    for (int i = 0; i < (int)piv.size(); ++i) pivot_of_col[piv[i]] = i;
    std::vector<int> free_cols;
    for (int c = 0; c < nc; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Mat basis(nc, (int)free_cols.size());
    for (int k = 0; k < (int)free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (int c = 0; c < nc; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0) basis.at(c, k) = fp::neg(m.at(pr, fc));
        }
    }
    return basis;
}

// One solution of Mx = b, if any.
inline std::optional<std::vector<i64>> solve(const Mat& m, const std::vector<i64>& b) {
    Mat aug(m.nr, m.nc + 1);
    for (int i = 0; i < m.nr; ++i) {
        for (int j = 0; j < m.nc; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.nc) = fp::norm(b[i]);
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == m.nc) return std::nullopt;  // inconsistent
    std::vector<i64> x(m.nc, 0);
    for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = aug.at(i, m.nc);
    return x;
}

// Solve MX = B column by column; throws if inconsistent.
inline Mat solve_all(const Mat& m, const Mat& b) {
    Mat x(m.nc, b.nc);
    for (int c = 0; c < b.nc; ++c) {
        std::vector<i64> col(b.nr);
        for (int i = 0; i < b.nr; ++i) col[i] = b.at(i, c);
        auto sol = solve(m, col);
        if (!sol) throw std::logic_error("inconsistent linear system in solve_all");
        for (int i = 0; i < m.nc; ++i) x.at(i, c) = (*sol)[i];
    }
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.nr != m.nc) return std::nullopt;
    Mat aug = hstack(m, Mat::identity(m.nr));
    std::vector<int> piv = rref(aug);
    if ((int)piv.size() != m.nr) return std::nullopt;
    Mat inv(m.nr, m.nr);
    for (int i = 0; i < m.nr; ++i)
        for (int j = 0; j < m.nr; ++j) inv.at(i, j) = aug.at(i, m.nr + j);
    return inv;
}

// Span utility: maintains an echelonized basis of a growing subspace.
struct Span {
    int dim;             // ambient dimension
    std::vector<std::vector<i64>> rows;  // echelon rows
    std::vector<int> lead;               // leading coordinate of each row

    explicit Span(int ambient) : dim(ambient) {}

    int rank() const { return (int)rows.size(); }

    // Reduce v against the basis; returns the residue.
    std::vector<i64> residue(std::vector<i64> v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            i64 c = v[lead[i]];
            if (c == 0) continue;
            for (int j = 0; j < dim; ++j) v[j] = fp::sub(v[j], fp::mul(c, rows[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<i64>& v) const {
        auto r = residue(v);
        for (i64 x : r)
            if (x != 0) return false;
        return true;
    }

    // Insert v; returns true if it enlarged the span.
    bool insert(const std::vector<i64>& v) {
        auto r = residue(v);
        int l = -1;
        for (int j = 0; j < dim; ++j)
            if (r[j] != 0) {
                l = j;
                break;
            }
        if (l < 0) return false;
        i64 iv = fp::inv(r[l]);
        for (int j = 0; j < dim; ++j) r[j] = fp::mul(r[j], iv);
        // keep earlier rows reduced as well so residues stay canonical
        for (size_t i = 0; i < rows.size(); ++i) {
            i64 c = rows[i][l];
            if (c == 0) continue;
            for (int j = 0; j < dim; ++j) rows[i][j] = fp::sub(rows[i][j], fp::mul(c, r[j]));
        }
        rows.push_back(std::move(r));
        lead.push_back(l);
        return true;
    }
};

}  // namespace dsilt
