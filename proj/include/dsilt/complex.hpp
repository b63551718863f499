// complex.hpp -- bounded complexes of finitely generated projectives.
//
// A complex stores, per degree, the list of projective summands (vertex
// indices: entry v means one copy of P_v) and the differential as a matrix
// with entries in Lambda: the (t,s) entry of delta^k is an element of
// e_{v_t} Lambda e_{v_s}, acting P_{v_s} -> P_{v_t} by left multiplication.
//
// Sign conventions: shift(X, k) translates degrees by -k (so shift(X, 1) is
// the suspension Sigma X) and multiplies the differential by (-1)^k; the cone
// of f: X -> Y has differential [[-delta_X, 0], [f, delta_Y]].
#pragma once

#include <cassert>
#include <map>

#include "module.hpp"

namespace dsilt {

// Matrix with entries in Lambda; an empty AlgElem means zero.
struct LambdaMat {
    int nr = 0, nc = 0;
    std::vector<AlgElem> ent;

    LambdaMat() = default;
    LambdaMat(int r, int c) : nr(r), nc(c), ent((size_t)r * c) {}

    AlgElem& at(int r, int c) { return ent[(size_t)r * nc + c]; }
    const AlgElem& at(int r, int c) const { return ent[(size_t)r * nc + c]; }

    bool entry_zero(int r, int c) const {
        const AlgElem& e = at(r, c);
        return e.empty() || QuiverAlgebra::is_zero(e);
    }

    bool is_zero() const {
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c)
                if (!entry_zero(r, c)) return false;
        return true;
    }
};

inline AlgElem elem_add(const AlgElem& a, const AlgElem& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    AlgElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp::add(a[i], b[i]);
    return r;
}

inline AlgElem elem_scale(const AlgElem& a, i64 c) {
    AlgElem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp::mul(a[i], c);
    return r;
}

inline LambdaMat lmat_add(const LambdaMat& a, const LambdaMat& b) {
    LambdaMat r(a.nr, a.nc);
    for (size_t i = 0; i < r.ent.size(); ++i) r.ent[i] = elem_add(a.ent[i], b.ent[i]);
    return r;
}

inline LambdaMat lmat_scale(const LambdaMat& a, i64 c) {
    LambdaMat r(a.nr, a.nc);
    for (size_t i = 0; i < r.ent.size(); ++i)
        if (!a.ent[i].empty()) r.ent[i] = elem_scale(a.ent[i], c);
    return r;
}

// Composite g o f: entries multiply in the algebra with g on the left
// (phi_lambda o phi_mu = phi_{lambda mu}).
inline LambdaMat lmat_mul(const QuiverAlgebra& A, const LambdaMat& g, const LambdaMat& f) {
    if (g.nc != f.nr) throw std::logic_error("LambdaMat shape mismatch");
    LambdaMat r(g.nr, f.nc);
    for (int i = 0; i < g.nr; ++i)
        for (int k = 0; k < g.nc; ++k) {
            if (g.entry_zero(i, k)) continue;
            for (int j = 0; j < f.nc; ++j) {
                if (f.entry_zero(k, j)) continue;
                r.at(i, j) = elem_add(r.at(i, j), A.mul(g.at(i, k), f.at(k, j)));
            }
        }
    return r;
}

struct ProjComplex {
    const QuiverAlgebra* A = nullptr;
    int lo = 0, hi = -1;                 // degree range; hi < lo means zero complex
    std::vector<std::vector<int>> summ;  // summ[k-lo] = vertex per summand of degree k
    std::vector<LambdaMat> diff;         // diff[k-lo]: degree k -> k+1 (last one empty)

    bool is_zero_complex() const {
        if (hi < lo) return true;
        for (auto& s : summ)
            if (!s.empty()) return false;
        return true;
    }

    const std::vector<int>& summands(int k) const {
        static const std::vector<int> none;
        if (k < lo || k > hi) return none;
        return summ[k - lo];
    }

    // delta^k : degree k -> k+1 (zero matrix outside the stored range)
    LambdaMat delta(int k) const {
        int nr = (int)summands(k + 1).size(), nc = (int)summands(k).size();
        if (k < lo || k >= hi) return LambdaMat(nr, nc);
        return diff[k - lo];
    }

    int total_summands() const {
        int t = 0;
        for (auto& s : summ) t += (int)s.size();
        return t;
    }

    // K_0 class: alternating sum of multiplicity vectors (true integers).
    std::vector<long long> k0() const {
        std::vector<long long> v(A->n, 0);
        for (int k = lo; k <= hi; ++k) {
            long long sgn = (k % 2 == 0) ? 1 : -1;
            for (int s : summands(k)) v[s] += sgn;
        }
        return v;
    }

    // Deterministic iso-invariant-ish prefilter key: per-degree sorted
    // multiplicities (not a complete invariant; use is_isomorphic to confirm).
    std::string signature() const {
        std::string s;
        for (int k = lo; k <= hi; ++k) {
            auto m = summands(k);
            std::sort(m.begin(), m.end());
            s += std::to_string(k) + ":";
            for (int v : m) s += std::to_string(v) + ",";
            s += ";";
        }
        return s;
    }

    void check() const {
        for (int k = lo; k <= hi; ++k) {
            LambdaMat d = delta(k);
            if (d.nr != (int)summands(k + 1).size() || d.nc != (int)summands(k).size())
                throw std::logic_error("differential shape mismatch");
            for (int t = 0; t < d.nr; ++t)
                for (int s = 0; s < d.nc; ++s) {
                    if (d.entry_zero(t, s)) continue;
                    const AlgElem& ent = d.at(t, s);
                    for (int b = 0; b < A->dim; ++b)
                        if (ent[b] != 0 && (A->basis[b].src != summands(k + 1)[t] ||
                                            A->basis[b].tgt != summands(k)[s]))
                            throw std::logic_error("differential entry in wrong Hom space");
                }
            if (k + 1 <= hi && !lmat_mul(*A, delta(k + 1), delta(k)).is_zero())
                throw std::logic_error("differential does not square to zero");
        }
    }

    // Drop zero summand lists at both ends (also normalizes the zero complex).
    void trim() {
        // tolerate a missing trailing zero map before normalizing
        if (lo <= hi) diff.resize(summ.size(), LambdaMat(0, 0));
        while (lo <= hi && summ.front().empty()) {
            summ.erase(summ.begin());
            if (!diff.empty()) diff.erase(diff.begin());
            ++lo;
        }
        while (lo <= hi && summ.back().empty()) {
            summ.pop_back();
            if (!diff.empty()) diff.pop_back();
            --hi;
        }
        if (lo > hi) {
            summ.clear();
            diff.clear();
            lo = 0;
            hi = -1;
        } else {
            // normalize boundary differentials' shapes
            for (int k = lo; k <= hi; ++k) {
                LambdaMat d = delta(k);
                diff[k - lo] = d;
            }
        }
    }
};

inline ProjComplex zero_complex(const QuiverAlgebra& A) {
    ProjComplex c;
    c.A = &A;
    return c;
}

// Stalk complex P_v placed in degree deg.
inline ProjComplex stalk_complex(const QuiverAlgebra& A, int v, int deg) {
    ProjComplex c;
    c.A = &A;
    c.lo = c.hi = deg;
    c.summ = {{v}};
    c.diff = {LambdaMat(0, 1)};
    return c;
}

// shift(X, k): new degree d holds old degree d + k, signs (-1)^k.
inline ProjComplex shift(const ProjComplex& x, int k) {
    ProjComplex c = x;
    c.lo -= k;
    c.hi -= k;
    if (k % 2 != 0)
        for (auto& d : c.diff) d = lmat_scale(d, fp::neg(1));
    return c;
}

inline ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
    if (x.is_zero_complex()) return y;
    if (y.is_zero_complex()) return x;
    ProjComplex c;
    c.A = x.A;
    c.lo = std::min(x.lo, y.lo);
    c.hi = std::max(x.hi, y.hi);
    for (int k = c.lo; k <= c.hi; ++k) {
        std::vector<int> s = x.summands(k);
        auto ys = y.summands(k);
        s.insert(s.end(), ys.begin(), ys.end());
        c.summ.push_back(s);
    }
    for (int k = c.lo; k <= c.hi; ++k) {
        int xr = (int)x.summands(k + 1).size(), xc = (int)x.summands(k).size();
        int yr = (int)y.summands(k + 1).size(), yc = (int)y.summands(k).size();
        LambdaMat d(xr + yr, xc + yc);
        LambdaMat dx = x.delta(k), dy = y.delta(k);
        for (int r = 0; r < xr; ++r)
            for (int cc = 0; cc < xc; ++cc) d.at(r, cc) = dx.at(r, cc);
        for (int r = 0; r < yr; ++r)
            for (int cc = 0; cc < yc; ++cc) d.at(xr + r, xc + cc) = dy.at(r, cc);
        c.diff.push_back(std::move(d));
    }
    return c;
}

// Hard truncation to degrees [l, h] (degreewise chop).
inline ProjComplex truncate_hard(const ProjComplex& x, int l, int h) {
    ProjComplex c;
    c.A = x.A;
    c.lo = std::max(x.lo, l);
    c.hi = std::min(x.hi, h);
    if (c.lo > c.hi) return zero_complex(*x.A);
    for (int k = c.lo; k <= c.hi; ++k) c.summ.push_back(x.summands(k));
    for (int k = c.lo; k <= c.hi; ++k) {
        if (k < c.hi)
            c.diff.push_back(x.delta(k));
        else
            c.diff.push_back(LambdaMat(0, (int)x.summands(k).size()));
    }
    c.trim();
    return c;
}

// A chain map stores full copies of its endpoints (complexes are tiny).
struct ChainMap {
    ProjComplex X, Y;
    std::map<int, LambdaMat> comp;  // degree -> component X^k -> Y^k

    LambdaMat at(int k) const {
        auto it = comp.find(k);
        if (it != comp.end()) return it->second;
        return LambdaMat((int)Y.summands(k).size(), (int)X.summands(k).size());
    }

    void check() const {
        int l = std::min(X.lo, Y.lo) - 1, h = std::max(X.hi, Y.hi) + 1;
        for (int k = l; k <= h; ++k) {
            LambdaMat lhs = lmat_mul(*X.A, Y.delta(k), at(k));
            LambdaMat rhs = lmat_mul(*X.A, at(k + 1), X.delta(k));
            for (size_t i = 0; i < lhs.ent.size(); ++i) {
                AlgElem dif = elem_add(lhs.ent[i], elem_scale(rhs.ent[i].empty() ? X.A->zero() : rhs.ent[i], fp::neg(1)));
                if (!dif.empty() && !QuiverAlgebra::is_zero(dif))
                    throw std::logic_error("not a chain map");
            }
        }
    }
};

// cone(f)^k = X^{k+1} (+) Y^k with differential [[-dX, 0], [f, dY]].
inline ProjComplex cone(const ChainMap& f) {
    const ProjComplex &X = f.X, &Y = f.Y;
    ProjComplex c;
    c.A = X.A;
    c.lo = std::min(X.lo - 1, Y.lo);
    c.hi = std::max(X.hi - 1, Y.hi);
    if (c.lo > c.hi) return zero_complex(*X.A);
    for (int k = c.lo; k <= c.hi; ++k) {
        std::vector<int> s = X.summands(k + 1);
        auto ys = Y.summands(k);
        s.insert(s.end(), ys.begin(), ys.end());
        c.summ.push_back(s);
    }
    for (int k = c.lo; k <= c.hi; ++k) {
        int xr = (int)X.summands(k + 2).size(), xc = (int)X.summands(k + 1).size();
        int yr = (int)Y.summands(k + 1).size(), yc = (int)Y.summands(k).size();
        LambdaMat d(xr + yr, xc + yc);
        LambdaMat dx = X.delta(k + 1), dy = Y.delta(k), fk = f.at(k + 1);
        for (int r = 0; r < xr; ++r)
            for (int cc = 0; cc < xc; ++cc)
                if (!dx.entry_zero(r, cc)) d.at(r, cc) = elem_scale(dx.at(r, cc), fp::neg(1));
        for (int r = 0; r < yr; ++r)
            for (int cc = 0; cc < xc; ++cc)
                if (!fk.entry_zero(r, cc)) d.at(xr + r, cc) = fk.at(r, cc);
        for (int r = 0; r < yr; ++r)
            for (int cc = 0; cc < yc; ++cc) d.at(xr + r, xc + cc) = dy.at(r, cc);
        c.diff.push_back(std::move(d));
    }
    c.trim();
    return c;
}

// Gaussian cancellation of invertible differential entries ("radical
// reduction"): repeatedly find delta^k(t,s) with invertible scalar part
// (source and target the same vertex), and cancel that pair of summands.
// The middle differential picks up the correction D - C A^{-1} B; the
// adjacent differentials just lose a row/column.  The result is homotopy
// equivalent to the input and has all differential entries in the radical.
inline ProjComplex minimize(ProjComplex x) {
    const QuiverAlgebra& A = *x.A;
    bool again = true;
    while (again) {
        again = false;
        for (int k = x.lo; k < x.hi && !again; ++k) {
            LambdaMat d = x.delta(k);
            for (int t = 0; t < d.nr && !again; ++t)
                for (int s = 0; s < d.nc && !again; ++s) {
                    if (d.entry_zero(t, s)) continue;
                    int vs = x.summands(k)[s], vt = x.summands(k + 1)[t];
                    if (vs != vt) continue;
                    if (A.scalar_part(d.at(t, s), vs) == 0) continue;
                    // cancel source summand s (degree k) against target t (k+1)
                    AlgElem Ainv = A.corner_inverse(d.at(t, s), vs);
                    int nc = d.nc, nr = d.nr;
                    // new middle differential D - C A^{-1} B
                    LambdaMat nd(nr - 1, nc - 1);
                    for (int r = 0, ri = 0; r < nr; ++r) {
                        if (r == t) continue;
                        for (int c = 0, ci = 0; c < nc; ++c) {
                            if (c == s) continue;
                            AlgElem corr;
                            if (!d.entry_zero(r, s) && !d.entry_zero(t, c))
                                corr = elem_scale(A.mul(A.mul(d.at(r, s), Ainv), d.at(t, c)),
                                                  fp::neg(1));
                            nd.at(ri, ci) = elem_add(d.at(r, c), corr);
                            ++ci;
                        }
                        ++ri;
                    }
                    // delta^{k-1}: drop row s; delta^{k+1}: drop column t
                    LambdaMat below = x.delta(k - 1);
                    LambdaMat nb(below.nr - 1, below.nc);
                    for (int r = 0, ri = 0; r < below.nr; ++r) {
                        if (r == s) continue;
                        for (int c = 0; c < below.nc; ++c) nb.at(ri, c) = below.at(r, c);
                        ++ri;
                    }
                    LambdaMat above = x.delta(k + 1);
                    LambdaMat na(above.nr, above.nc - 1);
                    for (int r = 0; r < above.nr; ++r)
                        for (int c = 0, ci = 0; c < above.nc; ++c) {
                            if (c == t) continue;
                            na.at(r, ci) = above.at(r, c);
                            ++ci;
                        }
                    x.summ[k - x.lo].erase(x.summ[k - x.lo].begin() + s);
                    x.summ[k + 1 - x.lo].erase(x.summ[k + 1 - x.lo].begin() + t);
                    x.diff[k - x.lo] = nd;
                    if (k - 1 >= x.lo) x.diff[k - 1 - x.lo] = nb;
                    if (k + 1 <= x.hi) x.diff[k + 1 - x.lo] = na;
                    again = true;
                }
        }
    }
    x.trim();
    return x;
}

inline bool is_minimal(const ProjComplex& x) {
    for (int k = x.lo; k < x.hi; ++k) {
        LambdaMat d = x.delta(k);
        for (const AlgElem& ent : d.ent)
            if (!ent.empty() && !x.A->in_radical(ent)) return false;
    }
    return true;
}

}  // namespace dsilt
