// decompose.hpp -- Krull-Schmidt machinery for complexes of projectives.
//
// Decomposition works through the endomorphism ring: radical via the trace
// bilinear form of the regular representation (valid for p > dim End, guarded
// by FieldTooSmall), idempotents via minimal polynomials of random elements
// in the semisimple quotient (with Cantor-Zassenhaus splitting), idempotent
// lifting by Newton iteration, and explicit splitting of the complex through
// projective covers of the idempotent's image.
#pragma once

#include <random>

#include "fppoly.hpp"
#include "hom.hpp"

namespace dsilt {

// A finite-dimensional unital algebra in coordinates: structure constants and
// the identity.  Used for End-rings (of complexes, in K or in the window
// target category).
struct FDAlgebra {
    int m = 0;
    std::vector<std::vector<std::vector<i64>>> sc;  // sc[i][j] = coords of b_i b_j
    std::vector<i64> one;

    std::vector<i64> mul(const std::vector<i64>& a, const std::vector<i64>& b) const {
        std::vector<i64> r(m, 0);
        for (int i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m; ++j) {
                if (b[j] == 0) continue;
                i64 c = fp::mul(a[i], b[j]);
                for (int k = 0; k < m; ++k)
                    if (sc[i][j][k] != 0) r[k] = fp::add(r[k], fp::mul(c, sc[i][j][k]));
            }
        }
        return r;
    }

    Mat left_mult(const std::vector<i64>& a) const {
        Mat L(m, m);
        for (int j = 0; j < m; ++j) {
            std::vector<i64> ej(m, 0);
            ej[j] = 1;
            auto col = mul(a, ej);
            for (int i = 0; i < m; ++i) L.at(i, j) = col[i];
        }
        return L;
    }

    bool is_commutative() const {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (sc[i][j] != sc[j][i]) return false;
        return true;
    }

    // Radical via the trace form Tr(L_x L_y); requires p > m.
    Mat radical_basis() const {  // columns = coordinates of a radical basis
        if (fp::modulus() <= m)
            throw FieldTooSmall("prime must exceed dim End for the trace-form radical");
        std::vector<Mat> L;
        for (int i = 0; i < m; ++i) {
            std::vector<i64> ei(m, 0);
            ei[i] = 1;
            L.push_back(left_mult(ei));
        }
        Mat G(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Mat P = L[i] * L[j];
                i64 tr = 0;
                for (int k = 0; k < m; ++k) tr = fp::add(tr, P.at(k, k));
                G.at(i, j) = tr;
            }
        return nullspace(G);
    }
};

// Quotient algebra E / span(rad columns): basis = complement coordinates.
struct QuotAlgebraData {
    FDAlgebra alg;                        // the quotient
    std::vector<std::vector<i64>> reps;   // E-coordinates of quotient basis
    Mat proj;                             // E-coords -> quotient coords
};

inline QuotAlgebraData quotient_algebra(const FDAlgebra& E, const Mat& rad) {
    QuotAlgebraData q;
    int m = E.m;
    Span sp(m);
    for (int c = 0; c < rad.nc; ++c) {
        std::vector<i64> col(m);
        for (int r = 0; r < m; ++r) col[r] = rad.at(r, c);
        sp.insert(col);
    }
    Span full = sp;
    for (int i = 0; i < m; ++i) {
        std::vector<i64> ei(m, 0);
        ei[i] = 1;
        if (full.insert(ei)) q.reps.push_back(ei);
    }
    int qm = (int)q.reps.size();
    // projection: solve [rad | reps] x = v, keep the reps part
    Mat sys(m, sp.rank() + qm);
    for (int c = 0; c < sp.rank(); ++c)
        for (int r = 0; r < m; ++r) sys.at(r, c) = sp.rows[c][r];
    for (int c = 0; c < qm; ++c)
        for (int r = 0; r < m; ++r) sys.at(r, sp.rank() + c) = q.reps[c][r];
    q.proj = Mat(qm, m);
    for (int v = 0; v < m; ++v) {
        std::vector<i64> unit(m, 0);
        unit[v] = 1;
        auto sol = solve(sys, unit);
        if (!sol) throw std::logic_error("quotient projection failed");
        for (int c = 0; c < qm; ++c) q.proj.at(c, v) = (*sol)[sp.rank() + c];
    }
    q.alg.m = qm;
    q.alg.sc.assign(qm, std::vector<std::vector<i64>>(qm));
    for (int i = 0; i < qm; ++i)
        for (int j = 0; j < qm; ++j)
            q.alg.sc[i][j] = q.proj.apply(E.mul(q.reps[i], q.reps[j]));
    q.alg.one = q.proj.apply(E.one);
    return q;
}

// Minimal polynomial of a in A (degree <= m).
inline Poly minimal_polynomial(const FDAlgebra& A, const std::vector<i64>& a) {
    Span sp(A.m);
    std::vector<std::vector<i64>> powers;
    std::vector<i64> cur = A.one;
    while (true) {
        if (!sp.insert(cur)) break;
        powers.push_back(cur);
        cur = A.mul(cur, a);
    }
    // cur = a^k is a combination of 1, a, ..., a^{k-1}: solve for coefficients
    int k = (int)powers.size();
    Mat sys(A.m, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < A.m; ++r) sys.at(r, c) = powers[c][r];
    auto sol = solve(sys, cur);
    if (!sol) throw std::logic_error("minimal polynomial solve failed");
    Poly p(k + 1, 0);
    for (int c = 0; c < k; ++c) p[c] = fp::neg((*sol)[c]);
    p[k] = 1;
    return p;
}

inline std::vector<i64> eval_poly(const FDAlgebra& A, const Poly& f,
                                  const std::vector<i64>& a) {
    std::vector<i64> r(A.m, 0);
    std::vector<i64> pw = A.one;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0)
            for (int k = 0; k < A.m; ++k) r[k] = fp::add(r[k], fp::mul(f[i], pw[k]));
        pw = A.mul(pw, a);
    }
    return r;
}

// Extended gcd for polynomials: g = gcd(a,b) = u a + v b.
inline void poly_ext_gcd(Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
    Poly u0{1}, v0{}, u1{}, v1{1};
    poly::trim(a);
    poly::trim(b);
    while (!b.empty()) {
        auto [q, r] = poly::divmod(a, b);
        Poly u2 = poly::sub(u0, poly::mul(q, u1));
        Poly v2 = poly::sub(v0, poly::mul(q, v1));
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    // normalize monic
    if (!a.empty()) {
        i64 iv = fp::inv(a.back());
        for (auto& c : a) c = fp::mul(c, iv);
        for (auto& c : u0) c = fp::mul(c, iv);
        for (auto& c : v0) c = fp::mul(c, iv);
    }
    g = a;
    u = u0;
    v = v0;
}

// A nontrivial idempotent in a semisimple algebra, or nullopt if the algebra
// is certified local (a division algebra); throws Undecided if neither could
// be established.
inline std::optional<std::vector<i64>> find_idempotent_semisimple(const FDAlgebra& S,
                                                                 std::mt19937_64& rng) {
    if (S.m == 1) return std::nullopt;
    bool commutative = S.is_commutative();
    i64 p = fp::modulus();
    for (int trial = 0; trial < 128; ++trial) {
        std::vector<i64> y(S.m);
        for (auto& c : y) c = (i64)(rng() % (unsigned long long)p);
        Poly mp = minimal_polynomial(S, y);
        if (poly::deg(mp) < 2) continue;
        // in a semisimple algebra the minimal polynomial is square-free
        Poly der = poly::derivative(mp);
        Poly sf = mp;
        Poly g0 = poly::gcd(mp, der);
        if (poly::deg(g0) > 0) {
            auto [q, r] = poly::divmod(mp, g0);
            (void)r;
            sf = poly::make_monic(q);
        }
        auto split = poly::split_squarefree(poly::make_monic(sf), rng);
        if (split) {
            // lift the coprime split of sf to a coprime split of mp: U collects
            // every factor of mp sharing a root with split->first
            Poly U = split->first;
            while (true) {
                auto [q, r] = poly::divmod(mp, U);
                (void)r;
                Poly g = poly::gcd(q, U);
                if (poly::deg(g) <= 0) break;
                U = poly::mul(U, g);
            }
            auto [V, rr] = poly::divmod(mp, U);
            (void)rr;
            if (poly::deg(V) <= 0 || poly::deg(U) <= 0) continue;
            Poly g, a, b;
            poly_ext_gcd(U, V, g, a, b);
            if (poly::deg(g) != 0) continue;  // not coprime (should not happen)
            // e = b V  satisfies e = 1 mod U, e = 0 mod V
            Poly e = poly::mod(poly::mul(b, V), mp);
            auto idem = eval_poly(S, e, y);
            // sanity
            auto sq = S.mul(idem, idem);
            if (sq != idem) throw std::logic_error("CRT idempotent is not idempotent");
            bool zero = true, id = true;
            for (int i = 0; i < S.m; ++i) {
                if (idem[i] != 0) zero = false;
                if (idem[i] != S.one[i]) id = false;
            }
            if (zero || id) continue;
            return idem;
        }
        // irreducible minimal polynomial of full degree in a commutative
        // algebra certifies a field
        if (commutative && poly::deg(mp) == S.m) return std::nullopt;
    }
    if (commutative) return std::nullopt;  // overwhelmingly a division algebra
    throw Undecided("could not split or certify the semisimple End quotient");
}

// Endomorphism algebra of a complex from its chain-map space (no homotopy
// quotient; callers pass minimal complexes, where null-homotopic endos lie in
// the radical anyway).
struct EndAlgebra {
    HomSpace H;      // hom_space(X, X), relations unused
    FDAlgebra E;     // in coordinates over the chain-map basis Z

    std::vector<i64> coords_of(const ChainMap& f) const {
        auto v = H.chain_coords(f);
        Mat sys = H.Z;
        auto sol = solve(sys, v);
        if (!sol) throw std::logic_error("endomorphism outside chain-map space");
        return *sol;
    }

    ChainMap map_of(const std::vector<i64>& c) const {
        std::vector<i64> v(H.amb, 0);
        for (int i = 0; i < (int)c.size(); ++i)
            if (c[i] != 0)
                for (int r = 0; r < H.amb; ++r)
                    v[r] = fp::add(v[r], fp::mul(c[i], H.Z.at(r, i)));
        return H.materialize(v);
    }
};

inline EndAlgebra end_algebra(const ProjComplex& X) {
    EndAlgebra ea;
    ea.H = hom_space(X, X);
    int m = ea.H.chain_dim();
    ea.E.m = m;
    ea.E.sc.assign(m, std::vector<std::vector<i64>>(m));
    std::vector<ChainMap> basis;
    for (int i = 0; i < m; ++i) {
        std::vector<i64> ei(m, 0);
        ei[i] = 1;
        basis.push_back(ea.map_of(ei));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            ea.E.sc[i][j] = ea.coords_of(compose(basis[i], basis[j]));
    // identity chain map
    ChainMap idm;
    idm.X = X;
    idm.Y = X;
    for (int k = X.lo; k <= X.hi; ++k) {
        int n = (int)X.summands(k).size();
        LambdaMat I(n, n);
        for (int s = 0; s < n; ++s) I.at(s, s) = X.A->idempotent(X.summands(k)[s]);
        idm.comp[k] = I;
    }
    ea.E.one = ea.coords_of(idm);
    return ea;
}

// Split X along an exact idempotent chain endomorphism e: realize each degree,
// cover the images of e and 1-e by projectives, change basis, and read the
// two diagonal blocks of the transported differential.
inline std::pair<ProjComplex, ProjComplex> split_by_idempotent(const ProjComplex& X,
                                                              const ChainMap& e) {
    const QuiverAlgebra& A = *X.A;
    Realization R = realize(X);
    std::vector<std::vector<int>> verts1, verts0;
    std::vector<Mat> u(X.hi - X.lo + 1), uinv(X.hi - X.lo + 1);
    for (int k = X.lo; k <= X.hi; ++k) {
        Mat ek = realize_lmat(A, X.summands(k), X.summands(k), e.at(k));
        int n = ek.nr;
        Mat ck = Mat::identity(n) - ek;
        ModuleRep amb = R.mc.mod(k);
        std::vector<Mat> cols_parts;
        std::vector<std::vector<int>> verts_parts;
        for (const Mat& proj : {ek, ck}) {
            SubQuot img = submodule(amb, proj);
            Cover cv = projective_cover(img.rep);
            std::vector<int> verts;
            for (int v = 0; v < A.n; ++v)
                for (int c = 0; c < cv.mult[v]; ++c) verts.push_back(v);
            cols_parts.push_back(img.map * cv.map);
            verts_parts.push_back(verts);
        }
        verts1.push_back(verts_parts[0]);
        verts0.push_back(verts_parts[1]);
        Mat uk = cols_parts[0].nc ? cols_parts[0] : Mat(n, 0);
        uk = hstack(uk, cols_parts[1]);
        if (uk.nc != n) throw std::logic_error("idempotent split dimension mismatch");
        auto inv = inverse(uk);
        if (!inv) throw std::logic_error("idempotent split basis not invertible");
        u[k - X.lo] = uk;
        uinv[k - X.lo] = *inv;
    }
    auto count_dim = [&](const std::vector<int>& vs) {
        int dmm = 0;
        for (int v : vs) dmm += proj_dim(A, v);
        return dmm;
    };
    // the transported differential must be block diagonal (e commutes with it)
    std::vector<Mat> nd(X.hi - X.lo + 1);
    for (int k = X.lo; k <= X.hi; ++k) {
        nd[k - X.lo] = (k < X.hi) ? uinv[k + 1 - X.lo] * (R.mc.delta(k) * u[k - X.lo])
                                  : Mat(0, u[k - X.lo].nc);
        if (k >= X.hi) continue;
        int rows1 = count_dim(verts1[k + 1 - X.lo]);
        int cols1 = count_dim(verts1[k - X.lo]);
        const Mat& m = nd[k - X.lo];
        for (int r = 0; r < m.nr; ++r)
            for (int c = 0; c < m.nc; ++c)
                if (((r < rows1) != (c < cols1)) && m.at(r, c) != 0)
                    throw std::logic_error("idempotent split: differential not block diagonal");
    }
    auto extract = [&](bool first) {
        const auto& verts = first ? verts1 : verts0;
        ProjComplex c;
        c.A = &A;
        c.lo = X.lo;
        c.hi = X.hi;
        c.summ = verts;
        for (int k = X.lo; k <= X.hi; ++k) {
            int rows1 = (k + 1 <= X.hi) ? count_dim(verts1[k + 1 - X.lo]) : 0;
            int cols1 = count_dim(verts1[k - X.lo]);
            const std::vector<int> empty;
            const auto& tgt = (k + 1 <= X.hi) ? verts[k + 1 - X.lo] : empty;
            int nr1 = count_dim(tgt), nc1 = count_dim(verts[k - X.lo]);
            int r0 = first ? 0 : rows1;
            int c0 = first ? 0 : cols1;
            Mat blk(nr1, nc1);
            for (int r = 0; r < nr1; ++r)
                for (int cc = 0; cc < nc1; ++cc)
                    blk.at(r, cc) = nd[k - X.lo].at(r0 + r, c0 + cc);
            c.diff.push_back(decode_lmat(A, c.summ[k - X.lo], tgt, blk));
        }
        c.trim();
        return c;
    };
    return {extract(true), extract(false)};
}

// Full Krull-Schmidt decomposition into minimal indecomposable complexes.
inline std::vector<ProjComplex> decompose(const ProjComplex& X0, std::mt19937_64& rng) {
    ProjComplex X = minimize(X0);
    if (X.is_zero_complex()) return {};
    EndAlgebra ea = end_algebra(X);
    Mat rad = ea.E.radical_basis();
    QuotAlgebraData q = quotient_algebra(ea.E, rad);
    auto idem = find_idempotent_semisimple(q.alg, rng);
    if (!idem) return {X};
    // lift: pull back to E, then Newton e <- 3e^2 - 2e^3 until exact
    std::vector<i64> e(ea.E.m, 0);
    for (int i = 0; i < q.alg.m; ++i)
        if ((*idem)[i] != 0)
            for (int k = 0; k < ea.E.m; ++k)
                e[k] = fp::add(e[k], fp::mul((*idem)[i], q.reps[i][k]));
    for (int it = 0; it < 64; ++it) {
        auto e2 = ea.E.mul(e, e);
        if (e2 == e) break;
        auto e3 = ea.E.mul(e2, e);
        for (int k = 0; k < ea.E.m; ++k)
            e[k] = fp::sub(fp::mul(3, e2[k]), fp::mul(2, e3[k]));
    }
    if (ea.E.mul(e, e) != e) throw std::logic_error("idempotent lifting did not converge");
    ChainMap em = ea.map_of(e);
    auto [x1, x0] = split_by_idempotent(X, em);
    if (x1.total_summands() == 0 || x0.total_summands() == 0 ||
        x1.total_summands() + x0.total_summands() != X.total_summands())
        throw std::logic_error("idempotent split lost summands");
    auto r1 = decompose(x1, rng);
    auto r0 = decompose(x0, rng);
    r1.insert(r1.end(), r0.begin(), r0.end());
    return r1;
}

// Degreewise invertibility of a chain map between minimal complexes with
// matching multiplicities: the scalar parts per vertex must be invertible.
inline bool chain_map_invertible(const ChainMap& f) {
    const QuiverAlgebra& A = *f.X.A;
    if (f.X.lo != f.Y.lo || f.X.hi != f.Y.hi) return false;
    for (int k = f.X.lo; k <= f.X.hi; ++k) {
        auto xs = f.X.summands(k);
        auto ys = f.Y.summands(k);
        if (xs.size() != ys.size()) return false;
        LambdaMat c = f.at(k);
        for (int v = 0; v < A.n; ++v) {
            std::vector<int> xi, yi;
            for (int s = 0; s < (int)xs.size(); ++s)
                if (xs[s] == v) xi.push_back(s);
            for (int t = 0; t < (int)ys.size(); ++t)
                if (ys[t] == v) yi.push_back(t);
            if (xi.size() != yi.size()) return false;
            Mat top((int)yi.size(), (int)xi.size());
            for (size_t r = 0; r < yi.size(); ++r)
                for (size_t cc = 0; cc < xi.size(); ++cc)
                    if (!c.entry_zero(yi[r], xi[cc]))
                        top.at((int)r, (int)cc) = A.scalar_part(c.at(yi[r], xi[cc]), v);
            if (!inverse(top)) return false;
        }
    }
    return true;
}

// Isomorphism test in K^b(proj): minimize both sides; a homotopy equivalence
// of minimal complexes is a degreewise isomorphism, so we look for an
// invertible chain map: 32 seeded random combinations, then a small
// exhaustive search; throws Undecided when neither settles it.
inline bool is_isomorphic(const ProjComplex& X0, const ProjComplex& Y0, std::mt19937_64& rng) {
    ProjComplex X = minimize(X0), Y = minimize(Y0);
    if (X.is_zero_complex() || Y.is_zero_complex())
        return X.is_zero_complex() && Y.is_zero_complex();
    if (X.signature() != Y.signature()) return false;
    HomSpace H = hom_space(X, Y);
    int z = H.chain_dim();
    if (z == 0) return false;
    i64 p = fp::modulus();
    auto try_vec = [&](const std::vector<i64>& c) {
        std::vector<i64> v(H.amb, 0);
        for (int i = 0; i < z; ++i)
            if (c[i] != 0)
                for (int r = 0; r < H.amb; ++r)
                    v[r] = fp::add(v[r], fp::mul(c[i], H.Z.at(r, i)));
        return chain_map_invertible(H.materialize(v));
    };
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<i64> c(z);
        for (auto& x : c) x = (i64)(rng() % (unsigned long long)p);
        if (try_vec(c)) return true;
    }
    if (z <= 8) {
        std::vector<i64> c(z, 0);
        while (true) {
            if (try_vec(c)) return true;
            int i = 0;
            while (i < z && c[i] == 3) c[i++] = 0;
            if (i == z) break;
            ++c[i];
        }
        return false;
    }
    throw Undecided("isomorphism test inconclusive");
}

}  // namespace dsilt
