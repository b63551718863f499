// silting.hpp -- d-term silting objects: predicates, the partial order
// P <= Q iff Hom(Q, Sigma^i P) = 0 for all i > 0, minimal left/right
// approximations, irreducible mutation, BFS enumeration from Lambda, and
// Hasse diagram construction by transitive reduction.
//
// Objects are kept basic: a silting object is a sorted list of ids into an
// IndecRegistry of pairwise non-isomorphic minimal indecomposable complexes.
// Two enumerated objects are equal iff their id lists coincide, which turns
// Krull-Schmidt dedup into integer comparisons.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "decompose.hpp"

namespace dsilt {

inline ChainMap identity_chain_map(const ProjComplex& X) {
    ChainMap idm;
    idm.X = X;
    idm.Y = X;
    for (int k = X.lo; k <= X.hi; ++k) {
        int n = (int)X.summands(k).size();
        LambdaMat I(n, n);
        for (int s = 0; s < n; ++s) I.at(s, s) = X.A->idempotent(X.summands(k)[s]);
        idm.comp[k] = I;
    }
    return idm;
}

// Interned store of minimal indecomposable complexes; ids are stable and
// pairwise non-isomorphic.  Ext dimensions between members are memoized.
struct IndecRegistry {
    const QuiverAlgebra* A = nullptr;
    std::mt19937_64 rng;

    std::vector<ProjComplex> objs;
    std::map<std::string, std::vector<int>> by_sig;
    mutable std::map<std::tuple<int, int, int>, int> ext_cache;

    IndecRegistry(const QuiverAlgebra& alg, unsigned long long seed) : A(&alg), rng(seed) {}

    // x must be indecomposable (callers decompose first); returns its id.
    int intern(const ProjComplex& x) {
        ProjComplex y = minimize(x);
        std::string sig = y.signature();
        for (int id : by_sig[sig])
            if (is_isomorphic(objs[id], y, rng)) return id;
        objs.push_back(y);
        int id = (int)objs.size() - 1;
        by_sig[sig].push_back(id);
        return id;
    }

    // Intern every indecomposable summand of x (with multiplicity).
    std::vector<int> intern_summands(const ProjComplex& x) {
        std::vector<int> ids;
        for (const ProjComplex& p : decompose(x, rng)) ids.push_back(intern(p));
        return ids;
    }

    int ext(int i, int j, int k) const {
        auto key = std::make_tuple(i, j, k);
        auto it = ext_cache.find(key);
        if (it != ext_cache.end()) return it->second;
        int v = ext_dim(objs[i], objs[j], k);
        ext_cache[key] = v;
        return v;
    }
};

// Hom functor selector: plain K^b homotopy classes, or the quotient by maps
// factoring through add Lambda[d-1] (the D-window semantics).
struct HomCat {
    int d = 0;
    bool stable = false;

    HomSpace homs(const ProjComplex& X, const ProjComplex& Y) const {
        return stable ? stable_hom_space(X, Y, d) : hom_space(X, Y);
    }
};

inline std::vector<i64> quot_class(const HomSpace& H, const ChainMap& f) {
    return H.quot_coords(H.chain_coords(f));
}

// FD algebra structure on the Hom quotient classes of End(a).
struct QuotEndAlgebra {
    HomSpace H;
    FDAlgebra E;

    ChainMap map_of(const std::vector<i64>& c) const { return H.combine(c); }
};

inline QuotEndAlgebra quot_end_algebra(HomSpace H) {
    QuotEndAlgebra qe;
    qe.H = std::move(H);
    int m = qe.H.dim();
    qe.E.m = m;
    qe.E.sc.assign(m, std::vector<std::vector<i64>>(m));
    std::vector<ChainMap> basis;
    for (int i = 0; i < m; ++i) basis.push_back(qe.H.rep_map(i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            qe.E.sc[i][j] = quot_class(qe.H, compose(basis[i], basis[j]));
    qe.E.one = quot_class(qe.H, identity_chain_map(qe.H.X));
    return qe;
}

// Hom classes of rad(a, b): everything if a and b are non-isomorphic
// indecomposables, the radical of End otherwise.  Returned as chain maps.
inline std::vector<ChainMap> radical_maps(const HomCat& cat, const ProjComplex& a,
                                          const ProjComplex& b, bool same) {
    std::vector<ChainMap> out;
    if (!same) {
        HomSpace H = cat.homs(a, b);
        for (int i = 0; i < H.dim(); ++i) out.push_back(H.rep_map(i));
        return out;
    }
    QuotEndAlgebra qe = quot_end_algebra(cat.homs(a, a));
    Mat rad = qe.E.radical_basis();
    for (int c = 0; c < rad.nc; ++c) {
        std::vector<i64> v(rad.nr);
        for (int r = 0; r < rad.nr; ++r) v[r] = rad.at(r, c);
        out.push_back(qe.map_of(v));
    }
    return out;
}

struct Approximation {
    ProjComplex obj;          // (+)_j members[j]^{mult[j]}
    ChainMap map;             // right: obj -> c ; left: c -> obj
    std::vector<int> mult;    // per member of the input list
};

namespace detail {

// Direct sum of parts with maps part_i -> c stacked into one map sum -> c.
inline Approximation stack_right(const std::vector<ProjComplex>& parts,
                                 const std::vector<ChainMap>& maps, const ProjComplex& c,
                                 std::vector<int> mult) {
    Approximation ap;
    ap.mult = std::move(mult);
    ap.obj = zero_complex(*c.A);
    for (const auto& p : parts) ap.obj = direct_sum(ap.obj, p);
    ap.map.X = ap.obj;
    ap.map.Y = c;
    int l = std::min(ap.obj.lo, c.lo), h = std::max(ap.obj.hi, c.hi);
    for (int k = l; k <= h; ++k) {
        int nr = (int)c.summands(k).size(), nc = (int)ap.obj.summands(k).size();
        if (nr == 0 || nc == 0) continue;
        LambdaMat m(nr, nc);
        int off = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            LambdaMat blk = maps[i].at(k);
            for (int r = 0; r < blk.nr; ++r)
                for (int cc = 0; cc < blk.nc; ++cc) m.at(r, off + cc) = blk.at(r, cc);
            off += blk.nc;
        }
        ap.map.comp[k] = m;
    }
    return ap;
}

// Maps c -> part_i stacked into one map c -> sum.
inline Approximation stack_left(const std::vector<ProjComplex>& parts,
                                const std::vector<ChainMap>& maps, const ProjComplex& c,
                                std::vector<int> mult) {
    Approximation ap;
    ap.mult = std::move(mult);
    ap.obj = zero_complex(*c.A);
    for (const auto& p : parts) ap.obj = direct_sum(ap.obj, p);
    ap.map.X = c;
    ap.map.Y = ap.obj;
    int l = std::min(ap.obj.lo, c.lo), h = std::max(ap.obj.hi, c.hi);
    for (int k = l; k <= h; ++k) {
        int nr = (int)ap.obj.summands(k).size(), nc = (int)c.summands(k).size();
        if (nr == 0 || nc == 0) continue;
        LambdaMat m(nr, nc);
        int off = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            LambdaMat blk = maps[i].at(k);
            for (int r = 0; r < blk.nr; ++r)
                for (int cc = 0; cc < blk.nc; ++cc) m.at(off + r, cc) = blk.at(r, cc);
            off += blk.nr;
        }
        ap.map.comp[k] = m;
    }
    return ap;
}

}  // namespace detail

// Minimal right add(members)-approximation of c.  The multiplicity of
// members[j] is the dim over End(members[j])/rad of
// Hom(members[j], c) / (sum over j' of Hom(members[j'], c) o rad(members[j], members[j'])),
// and representatives of a basis of that top give the components.
inline Approximation minimal_right_approx(const ProjComplex& c,
                                          const std::vector<ProjComplex>& members,
                                          const HomCat& cat) {
    size_t n = members.size();
    std::vector<HomSpace> H;
    H.reserve(n);
    for (size_t j = 0; j < n; ++j) H.push_back(cat.homs(members[j], c));

    std::vector<ProjComplex> parts;
    std::vector<ChainMap> maps;
    std::vector<int> mult(n, 0);
    for (size_t j = 0; j < n; ++j) {
        int dj = H[j].dim();
        if (dj == 0) continue;
        Span W(dj);
        for (size_t j2 = 0; j2 < n; ++j2) {
            if (H[j2].dim() == 0) continue;
            for (const ChainMap& r : radical_maps(cat, members[j], members[j2], j == j2))
                for (int h = 0; h < H[j2].dim(); ++h)
                    W.insert(quot_class(H[j], compose(H[j2].rep_map(h), r)));
        }
        QuotEndAlgebra qe = quot_end_algebra(cat.homs(members[j], members[j]));
        std::vector<ChainMap> ebasis;
        for (int i = 0; i < qe.H.dim(); ++i) ebasis.push_back(qe.H.rep_map(i));
        for (int i = 0; i < dj; ++i) {
            std::vector<i64> ei(dj, 0);
            ei[i] = 1;
            if (W.contains(ei)) continue;
            ChainMap pick = H[j].rep_map(i);
            parts.push_back(members[j]);
            maps.push_back(pick);
            ++mult[j];
            // cover the whole End-orbit of the pick so later unit vectors in
            // the same top line are not double-counted
            for (const ChainMap& e : ebasis) W.insert(quot_class(H[j], compose(pick, e)));
        }
    }
    return detail::stack_right(parts, maps, c, std::move(mult));
}

// Minimal left add(members)-approximation of c (formal dual).
inline Approximation minimal_left_approx(const ProjComplex& c,
                                         const std::vector<ProjComplex>& members,
                                         const HomCat& cat) {
    size_t n = members.size();
    std::vector<HomSpace> H;
    H.reserve(n);
    for (size_t j = 0; j < n; ++j) H.push_back(cat.homs(c, members[j]));

    std::vector<ProjComplex> parts;
    std::vector<ChainMap> maps;
    std::vector<int> mult(n, 0);
    for (size_t j = 0; j < n; ++j) {
        int dj = H[j].dim();
        if (dj == 0) continue;
        Span W(dj);
        for (size_t j2 = 0; j2 < n; ++j2) {
            if (H[j2].dim() == 0) continue;
            for (const ChainMap& r : radical_maps(cat, members[j2], members[j], j == j2))
                for (int h = 0; h < H[j2].dim(); ++h)
                    W.insert(quot_class(H[j], compose(r, H[j2].rep_map(h))));
        }
        QuotEndAlgebra qe = quot_end_algebra(cat.homs(members[j], members[j]));
        std::vector<ChainMap> ebasis;
        for (int i = 0; i < qe.H.dim(); ++i) ebasis.push_back(qe.H.rep_map(i));
        for (int i = 0; i < dj; ++i) {
            std::vector<i64> ei(dj, 0);
            ei[i] = 1;
            if (W.contains(ei)) continue;
            ChainMap pick = H[j].rep_map(i);
            parts.push_back(members[j]);
            maps.push_back(pick);
            ++mult[j];
            for (const ChainMap& e : ebasis) W.insert(quot_class(H[j], compose(e, pick)));
        }
    }
    return detail::stack_left(parts, maps, c, std::move(mult));
}

// A basic d-term object as a sorted id list into a registry.
struct SiltObj {
    std::vector<int> ids;

    bool operator==(const SiltObj& o) const { return ids == o.ids; }
    bool operator<(const SiltObj& o) const { return ids < o.ids; }
};

inline SiltObj make_silt(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return SiltObj{std::move(ids)};
}

inline bool is_basic(const SiltObj& m) {
    for (size_t i = 0; i + 1 < m.ids.size(); ++i)
        if (m.ids[i] == m.ids[i + 1]) return false;
    return true;
}

// Hom(M, Sigma^i M) = 0 for i = 1..d-1 (i >= d vanishes by window support).
inline bool is_presilting(const IndecRegistry& reg, const SiltObj& m, int d) {
    for (int i : m.ids)
        for (int j : m.ids)
            for (int k = 1; k <= d - 1; ++k)
                if (reg.ext(i, j, k) != 0) return false;
    return true;
}

// Integer determinant of the K_0 matrix (rows = classes of the summands),
// by fraction-free elimination.
inline long long k0_det(const IndecRegistry& reg, const SiltObj& m) {
    int n = reg.A->n;
    if ((int)m.ids.size() != n) return 0;
    std::vector<std::vector<long long>> a(n);
    for (int i = 0; i < n; ++i) a[i] = reg.objs[m.ids[i]].k0();
    long long prev = 1, sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Thick-generation proxy: presilting, n summands, unimodular K_0 matrix.
inline bool is_silting(const IndecRegistry& reg, const SiltObj& m, int d) {
    if ((int)m.ids.size() != reg.A->n || !is_basic(m)) return false;
    if (!is_presilting(reg, m, d)) return false;
    long long det = k0_det(reg, m);
    return det == 1 || det == -1;
}

// P <= Q iff Hom(Q, Sigma^i P) = 0 for all i > 0 (i = 1..d-1 suffices).
inline bool silt_leq(const IndecRegistry& reg, const SiltObj& p, const SiltObj& q, int d) {
    for (int j : q.ids)
        for (int i : p.ids)
            for (int k = 1; k <= d - 1; ++k)
                if (reg.ext(j, i, k) != 0) return false;
    return true;
}

// Irreducible left mutation at summand position idx: replace X by the cone of
// its minimal left add(M/X)-approximation.  Returns nothing when the mutated
// object leaves the d-term window or fails the silting checks.
inline std::optional<SiltObj> left_mutate(IndecRegistry& reg, const SiltObj& m, int idx,
                                          int d) {
    std::vector<ProjComplex> others;
    std::vector<int> other_ids;
    for (size_t i = 0; i < m.ids.size(); ++i)
        if ((int)i != idx) {
            others.push_back(reg.objs[m.ids[i]]);
            other_ids.push_back(m.ids[i]);
        }
    const ProjComplex& X = reg.objs[m.ids[idx]];
    HomCat cat{d, false};
    Approximation ap = minimal_left_approx(X, others, cat);
    ProjComplex C = minimize(cone(ap.map));
    if (C.is_zero_complex()) return std::nullopt;
    if (C.lo < -d + 1 || C.hi > 0) return std::nullopt;  // left the window
    std::vector<int> ids = other_ids;
    for (int id : reg.intern_summands(C)) ids.push_back(id);
    SiltObj cand = make_silt(std::move(ids));
    if (!is_silting(reg, cand, d)) return std::nullopt;
    if (!silt_leq(reg, cand, m, d) || silt_leq(reg, m, cand, d)) return std::nullopt;
    return cand;
}

// Dual right mutation (cocone of the minimal right approximation); used for
// the involution cross-check across Hasse covers.
inline std::optional<SiltObj> right_mutate(IndecRegistry& reg, const SiltObj& m, int idx,
                                           int d) {
    std::vector<ProjComplex> others;
    std::vector<int> other_ids;
    for (size_t i = 0; i < m.ids.size(); ++i)
        if ((int)i != idx) {
            others.push_back(reg.objs[m.ids[i]]);
            other_ids.push_back(m.ids[i]);
        }
    const ProjComplex& X = reg.objs[m.ids[idx]];
    HomCat cat{d, false};
    Approximation ap = minimal_right_approx(X, others, cat);
    ProjComplex C = minimize(shift(cone(ap.map), -1));
    if (C.is_zero_complex()) return std::nullopt;
    if (C.lo < -d + 1 || C.hi > 0) return std::nullopt;
    std::vector<int> ids = other_ids;
    for (int id : reg.intern_summands(C)) ids.push_back(id);
    SiltObj cand = make_silt(std::move(ids));
    if (!is_silting(reg, cand, d)) return std::nullopt;
    if (!silt_leq(reg, m, cand, d) || silt_leq(reg, cand, m, d)) return std::nullopt;
    return cand;
}

struct SiltingPoset {
    IndecRegistry* reg = nullptr;
    int d = 0;
    std::vector<SiltObj> elems;
    std::vector<std::vector<bool>> leq;          // leq[i][j]: elems[i] <= elems[j]
    std::vector<std::pair<int, int>> hasse;      // (lower, upper) covers
    int max_idx = -1, min_idx = -1;

    int find(const SiltObj& m) const {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == m) return (int)i;
        return -1;
    }
};

// BFS closure of {Lambda} under left mutation at every summand, then order
// and Hasse computation.  Cross-checks: the order is a partial order and
// Lambda / Sigma^{d-1} Lambda are its unique maximum and minimum.
inline SiltingPoset enumerate_d_silt(IndecRegistry& reg, int d, int bfs_cap = 4096) {
    const QuiverAlgebra& A = *reg.A;
    SiltingPoset ps;
    ps.reg = &reg;
    ps.d = d;

    std::vector<int> lam_ids;
    for (int v = 0; v < A.n; ++v) lam_ids.push_back(reg.intern(stalk_complex(A, v, 0)));
    SiltObj lambda = make_silt(lam_ids);
    if (!is_silting(reg, lambda, d)) throw std::logic_error("Lambda is not silting");

    std::vector<SiltObj> found{lambda};
    std::vector<size_t> queue{0};
    std::set<std::vector<int>> seen{lambda.ids};
    while (!queue.empty()) {
        size_t cur = queue.back();
        queue.pop_back();
        SiltObj m = found[cur];
        for (int idx = 0; idx < (int)m.ids.size(); ++idx) {
            auto cand = left_mutate(reg, m, idx, d);
            if (!cand) continue;
            if (seen.insert(cand->ids).second) {
                found.push_back(*cand);
                if ((int)found.size() > bfs_cap)
                    throw Diverged("silting BFS exceeded cap " + std::to_string(bfs_cap));
                queue.push_back(found.size() - 1);
            }
        }
    }
    ps.elems = std::move(found);
    int n = (int)ps.elems.size();
    ps.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ps.leq[i][j] = silt_leq(reg, ps.elems[i], ps.elems[j], d);
    // partial-order sanity
    for (int i = 0; i < n; ++i) {
        if (!ps.leq[i][i]) throw std::logic_error("silting order not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && ps.leq[i][j] && ps.leq[j][i])
                throw std::logic_error("silting order not antisymmetric");
            for (int k = 0; k < n; ++k)
                if (ps.leq[i][j] && ps.leq[j][k] && !ps.leq[i][k])
                    throw std::logic_error("silting order not transitive");
        }
    }
    // unique extremes
    for (int i = 0; i < n; ++i) {
        bool mx = true, mn = true;
        for (int j = 0; j < n; ++j) {
            if (!ps.leq[j][i]) mx = false;
            if (!ps.leq[i][j]) mn = false;
        }
        if (mx) {
            if (ps.max_idx >= 0) throw std::logic_error("silting maximum not unique");
            ps.max_idx = i;
        }
        if (mn) {
            if (ps.min_idx >= 0) throw std::logic_error("silting minimum not unique");
            ps.min_idx = i;
        }
    }
    if (ps.max_idx < 0 || ps.min_idx < 0)
        throw std::logic_error("silting poset lacks a maximum or minimum");
    if (!(ps.elems[ps.max_idx] == lambda))
        throw std::logic_error("Lambda is not the maximum silting object");
    std::vector<int> slam_ids;
    for (int v = 0; v < A.n; ++v) slam_ids.push_back(reg.intern(stalk_complex(A, v, -d + 1)));
    if (!(ps.elems[ps.min_idx] == make_silt(slam_ids)))
        throw std::logic_error("Sigma^{d-1} Lambda is not the minimum silting object");
    // Hasse: covers of the order, edges oriented lower -> upper
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !ps.leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && ps.leq[i][k] && ps.leq[k][j]) {
                    cover = false;
                    break;
                }
            if (cover) ps.hasse.emplace_back(i, j);
        }
    return ps;
}

}  // namespace dsilt
