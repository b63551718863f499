// module_complex.hpp -- bounded complexes of concrete Lambda-modules, smart
// truncations, and projective resolutions of truncated projective complexes.
//
// These realize the target category D^{[-d+2,0]}(mod Lambda): a window complex
// of projectives X maps to tau_{>= -d+2} X, the module complex which keeps
// degrees > -d+1 and replaces degree -d+1 by the coimage of its differential.
#pragma once

#include "complex.hpp"

namespace dsilt {

struct ModuleComplex {
    const QuiverAlgebra* A = nullptr;
    int lo = 0, hi = -1;
    std::vector<ModuleRep> mods;  // mods[k-lo]
    std::vector<Mat> diff;        // diff[k-lo]: degree k -> k+1 (last one 0 x dim)

    const ModuleRep& mod(int k) const {
        static const ModuleRep none;
        if (k < lo || k > hi) {
            return none;
        }
        return mods[k - lo];
    }

    int dim_at(int k) const { return (k < lo || k > hi) ? 0 : mods[k - lo].dim(); }

    Mat delta(int k) const {
        if (k < lo || k > hi) return Mat(dim_at(k + 1), dim_at(k));
        if (k == hi) return Mat(dim_at(k + 1), dim_at(k));
        return diff[k - lo];
    }

    int cohom_dim(int k) const {
        if (dim_at(k) == 0) return 0;
        Mat d = delta(k);
        int kerdim = dim_at(k) - rank(d);
        int imdim = rank(delta(k - 1));
        return kerdim - imdim;
    }

    void check() const {
        for (int k = lo; k < hi; ++k) {
            if (!mods[k - lo].is_linear_map_to(mods[k + 1 - lo], diff[k - lo]))
                throw std::logic_error("module differential not Lambda-linear");
            if (k + 1 < hi && !(delta(k + 1) * delta(k)).is_zero())
                throw std::logic_error("module differential does not square to zero");
        }
    }
};

// shift by k (degrees translate by -k), signs (-1)^k.
inline ModuleComplex shift_mod(ModuleComplex m, int k) {
    m.lo -= k;
    m.hi -= k;
    if (k % 2 != 0)
        for (auto& d : m.diff) d = d.scaled(fp::neg(1));
    return m;
}

// Concrete realization of a complex of projectives; per-degree the module is
// the canonical realization of the direct sum (summand by summand, path basis
// in algebra order).  Also records block offsets for decoding.
struct Realization {
    ModuleComplex mc;
    // offsets[k-lo][s] = first coordinate of summand s in degree k
    std::vector<std::vector<int>> offsets;
};

inline int proj_dim(const QuiverAlgebra& A, int v) {
    int d = 0;
    for (int b = 0; b < A.dim; ++b)
        if (A.basis[b].src == v) ++d;
    return d;
}

// Concrete matrix of the Lambda-matrix f between canonical realizations.
inline Mat realize_lmat(const QuiverAlgebra& A, const std::vector<int>& src,
                        const std::vector<int>& tgt, const LambdaMat& f) {
    std::vector<int> soff(src.size() + 1, 0), toff(tgt.size() + 1, 0);
    for (size_t s = 0; s < src.size(); ++s) soff[s + 1] = soff[s] + proj_dim(A, src[s]);
    for (size_t t = 0; t < tgt.size(); ++t) toff[t + 1] = toff[t] + proj_dim(A, tgt[t]);
    Mat m(toff.back(), soff.back());
    for (size_t t = 0; t < tgt.size(); ++t)
        for (size_t s = 0; s < src.size(); ++s) {
            if (f.entry_zero((int)t, (int)s)) continue;
            const AlgElem& lam = f.at((int)t, (int)s);
            // column = basis path q of P_{src[s]}; image = lam * q in P_{tgt[t]}
            int ci = 0;
            for (int b = 0; b < A.dim; ++b) {
                if (A.basis[b].src != src[s]) continue;
                AlgElem img = A.mul(lam, A.unit_of(b));
                int ri = 0;
                for (int b2 = 0; b2 < A.dim; ++b2) {
                    if (A.basis[b2].src != tgt[t]) continue;
                    m.at(toff[t] + ri, soff[s] + ci) = img[b2];
                    ++ri;
                }
                ++ci;
            }
        }
    return m;
}

inline Realization realize(const ProjComplex& x) {
    const QuiverAlgebra& A = *x.A;
    Realization r;
    r.mc.A = &A;
    r.mc.lo = x.lo;
    r.mc.hi = x.hi;
    for (int k = x.lo; k <= x.hi; ++k) {
        ModuleRep m = zero_module(A);
        std::vector<int> off;
        for (int v : x.summands(k)) {
            off.push_back(m.dim());
            m = direct_sum(m, projective_module(A, v));
        }
        r.offsets.push_back(off);
        r.mc.mods.push_back(std::move(m));
    }
    for (int k = x.lo; k <= x.hi; ++k)
        r.mc.diff.push_back(realize_lmat(A, x.summands(k), x.summands(k + 1), x.delta(k)));
    return r;
}

// Decode a concrete Lambda-linear map between canonical realizations back to
// a Lambda-matrix: the (t,s) entry is the image of the generator e_{src[s]}
// read off inside the target block t.
inline LambdaMat decode_lmat(const QuiverAlgebra& A, const std::vector<int>& src,
                             const std::vector<int>& tgt, const Mat& f) {
    std::vector<int> soff(src.size() + 1, 0), toff(tgt.size() + 1, 0);
    for (size_t s = 0; s < src.size(); ++s) soff[s + 1] = soff[s] + proj_dim(A, src[s]);
    for (size_t t = 0; t < tgt.size(); ++t) toff[t + 1] = toff[t] + proj_dim(A, tgt[t]);
    LambdaMat out((int)tgt.size(), (int)src.size());
    for (size_t s = 0; s < src.size(); ++s) {
        // generator coordinate: the trivial path is first in the length-lex
        // path order of P_{src[s]}
        int gen = soff[s];
        for (size_t t = 0; t < tgt.size(); ++t) {
            AlgElem lam = A.zero();
            int ri = 0;
            bool nz = false;
            for (int b2 = 0; b2 < A.dim; ++b2) {
                if (A.basis[b2].src != tgt[t]) continue;
                i64 c = f.at(toff[t] + ri, gen);
                if (c != 0) {
                    lam[b2] = c;
                    nz = true;
                }
                ++ri;
            }
            if (nz) out.at((int)t, (int)s) = lam;
        }
    }
    return out;
}

// tau^{<=m}: degrees < m unchanged, degree m replaced by ker(delta^m).
inline ModuleComplex smart_truncate_leq(const ModuleComplex& m, int mdeg) {
    if (m.hi <= mdeg - 1 || m.hi < m.lo) {
        ModuleComplex c = m;
        return c;
    }
    ModuleComplex c;
    c.A = m.A;
    c.lo = m.lo;
    c.hi = std::min(m.hi, mdeg);
    if (c.lo > c.hi) {
        c.lo = 0;
        c.hi = -1;
        return c;
    }
    for (int k = c.lo; k < c.hi; ++k) c.mods.push_back(m.mod(k));
    SubQuot ker = kernel_submodule(m.mod(mdeg), m.mod(mdeg + 1), m.delta(mdeg));
    c.mods.push_back(ker.rep);
    for (int k = c.lo; k < c.hi; ++k) {
        if (k + 1 < c.hi)
            c.diff.push_back(m.delta(k));
        else
            c.diff.push_back(solve_all(ker.map, m.delta(k)));  // corestrict into the kernel
    }
    c.diff.push_back(Mat(0, c.mods.back().dim()));
    return c;
}

// tau^{>=m}: degree m-1 replaced by the coimage M^{m-1}/ker(delta^{m-1}),
// degrees >= m unchanged.
inline ModuleComplex smart_truncate_geq(const ModuleComplex& m, int mdeg) {
    if (m.lo >= mdeg) return m;
    ModuleComplex c;
    c.A = m.A;
    c.lo = mdeg - 1;
    c.hi = m.hi;
    if (c.lo > c.hi) {
        c.lo = 0;
        c.hi = -1;
        return c;
    }
    Mat d = m.delta(mdeg - 1);
    Mat ker = nullspace(d);
    SubQuot q = quotient_module(m.mod(mdeg - 1), ker);
    c.mods.push_back(q.rep);
    for (int k = mdeg; k <= m.hi; ++k) c.mods.push_back(m.mod(k));
    // induced differential: delta o section (kept coordinates embed)
    {
        int amb = m.mod(mdeg - 1).dim();
        // rebuild the section used by quotient_module: kept coordinates
        // are those that are not leads of the kernel span
        Span red(amb);
        for (int cc = 0; cc < ker.nc; ++cc) {
            std::vector<i64> col(amb);
            for (int r = 0; r < amb; ++r) col[r] = ker.at(r, cc);
            red.insert(col);
        }
        std::vector<char> pivot(amb, 0);
        for (int l : red.lead) pivot[l] = 1;
        Mat sec(amb, q.rep.dim());
        int c2 = 0;
        for (int i = 0; i < amb; ++i)
            if (!pivot[i]) sec.at(i, c2++) = 1;
        c.diff.push_back(d * sec);
    }
    for (int k = mdeg; k <= m.hi; ++k) {
        if (k < m.hi)
            c.diff.push_back(m.delta(k));
        else
            c.diff.push_back(Mat(0, m.mod(k).dim()));
    }
    // drop an all-zero bottom degree (coimage may vanish)
    while (c.lo <= c.hi && c.mods.front().dim() == 0) {
        c.mods.erase(c.mods.begin());
        c.diff.erase(c.diff.begin());
        ++c.lo;
    }
    return c;
}

// The module complex realizing tau_{>= -d+2} X for a window complex X.
inline ModuleComplex mod_of_tau(const ProjComplex& x, int d) {
    if (x.is_zero_complex()) {
        ModuleComplex c;
        c.A = x.A;
        return c;
    }
    return smart_truncate_geq(realize(x).mc, -d + 2);
}

// Cone of a degreewise map (chain map) between module complexes.
inline ModuleComplex cone_mod(const ModuleComplex& X, const ModuleComplex& Y,
                              const std::map<int, Mat>& f) {
    ModuleComplex c;
    c.A = X.A ? X.A : Y.A;
    c.lo = std::min(X.lo - 1, Y.lo);
    c.hi = std::max(X.hi - 1, Y.hi);
    if (c.lo > c.hi) {
        c.lo = 0;
        c.hi = -1;
        return c;
    }
    auto fat = [&](int k) {
        auto it = f.find(k);
        if (it != f.end()) return it->second;
        return Mat(Y.dim_at(k), X.dim_at(k));
    };
    for (int k = c.lo; k <= c.hi; ++k) {
        ModuleRep m = zero_module(*c.A);
        if (X.dim_at(k + 1) > 0) m = direct_sum(m, X.mod(k + 1));
        if (Y.dim_at(k) > 0) m = direct_sum(m, Y.mod(k));
        if (X.dim_at(k + 1) == 0 && Y.dim_at(k) == 0) m = zero_module(*c.A);
        c.mods.push_back(std::move(m));
    }
    for (int k = c.lo; k <= c.hi; ++k) {
        int xr = X.dim_at(k + 2), xc = X.dim_at(k + 1);
        int yr = Y.dim_at(k + 1), yc = Y.dim_at(k);
        Mat d(xr + yr, xc + yc);
        Mat dx = X.delta(k + 1), dy = Y.delta(k), fk = fat(k + 1);
        for (int r = 0; r < xr; ++r)
            for (int cc = 0; cc < xc; ++cc) d.at(r, cc) = fp::neg(dx.at(r, cc));
        for (int r = 0; r < yr; ++r)
            for (int cc = 0; cc < xc; ++cc) d.at(xr + r, cc) = fk.at(r, cc);
        for (int r = 0; r < yr; ++r)
            for (int cc = 0; cc < yc; ++cc) d.at(xr + r, xc + cc) = dy.at(r, cc);
        c.diff.push_back(std::move(d));
    }
    return c;
}

// Projective resolution of tau_{>= -d+2} X for a window complex X, hard-cut
// at degree `cut` (callers only probe Homs into targets far above the cut,
// where the chop is invisible).  Degrees >= -d+1 are X itself; below, kernels
// are resolved by projective covers.
inline ProjComplex resolve_tau(const ProjComplex& x, int d, int cut) {
    const QuiverAlgebra& A = *x.A;
    if (x.is_zero_complex() || x.lo >= -d + 2) return x;  // tau X = X already
    if (x.lo < -d + 1) throw OutOfWindow("resolve_tau expects a window complex");
    ProjComplex r = x;
    // current kernel to cover: ker(delta^{-d+1}) inside realize(X^{-d+1})
    ModuleRep amb = zero_module(A);
    for (int v : x.summands(-d + 1)) amb = direct_sum(amb, projective_module(A, v));
    Mat dmat = realize_lmat(A, x.summands(-d + 1), x.summands(-d + 2), x.delta(-d + 1));
    SubQuot ker = submodule(amb, nullspace(dmat));
    std::vector<int> below_tgt = x.summands(-d + 1);
    ModuleRep below_amb = amb;
    Mat incl = ker.map;  // kernel -> realization of current bottom degree
    for (int deg = -d; deg >= cut; --deg) {
        Cover cv = projective_cover(ker.rep);
        std::vector<int> verts;
        for (int v = 0; v < A.n; ++v)
            for (int c = 0; c < cv.mult[v]; ++c) verts.push_back(v);
        if (verts.empty()) break;  // resolved completely
        Mat to_below = incl * cv.map;  // realize(new degree) -> realize(below)
        LambdaMat dl = decode_lmat(A, verts, below_tgt, to_below);
        // prepend the new degree
        r.summ.insert(r.summ.begin(), verts);
        r.diff.insert(r.diff.begin(), dl);
        r.lo = deg;
        if (deg == cut) break;
        // next kernel: ker(cover) inside realize(new degree)
        ModuleRep newamb = projective_sum_module(A, verts);
        SubQuot nker = submodule(newamb, nullspace(cv.map));
        below_tgt = verts;
        below_amb = newamb;
        incl = nker.map;
        ker = nker;
    }
    return r;
}

}  // namespace dsilt
