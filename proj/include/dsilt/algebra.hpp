// algebra.hpp -- bound quiver algebras Lambda = kQ/I over F_p.
//
// Conventions (fixed throughout the library):
//   * paths are written in travel order: a path from u to v is a sequence of
//     arrows a1,...,ak with src(a1)=u, tgt(ak)=v, and the product p*q is
//     "p then q" (defined when tgt(p) = src(q));
//   * modules are right modules; the indecomposable projective P_i = e_i Lambda
//     has basis the residues of paths starting at i;
//   * Hom(P_i, P_j) = e_j Lambda e_i acts by left multiplication, so its basis
//     consists of (residues of) paths from j to i.
//
// The F_p-basis of Lambda is the echelon basis of span(paths of length < N)
// modulo the relation ideal, with coordinates ordered length-lexicographically.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "fp.hpp"

namespace dsilt {

struct Arrow {
    std::string name;
    int src = 0, tgt = 0;  // 0-based vertex indices
};

struct RelationTerm {
    i64 coeff = 1;
    std::vector<int> arrows;  // arrow indices, travel order
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct AlgebraSpec {
    i64 p = 10007;
    int n_vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    int nilpotency = -1;  // -1: not given
    int d = -1;           // optional default d
};

// Text format, one directive per line ('#' starts a comment):
//   field <p>
//   vertices <n>
//   arrow <name> <src> <tgt>          (1-based vertices)
//   relation <c1>*<a.b.c> + <c2>*<...> ...
//   nilpotency <N>
//   d <d>
inline AlgebraSpec parse_algebra_spec(std::istream& in) {
    AlgebraSpec sp;
    std::map<std::string, int> arrow_id;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "field") {
            if (!(ls >> sp.p) || sp.p < 2) fail("bad field directive");
        } else if (kw == "vertices") {
            if (!(ls >> sp.n_vertices) || sp.n_vertices < 1) fail("bad vertices directive");
        } else if (kw == "arrow") {
            Arrow a;
            if (!(ls >> a.name >> a.src >> a.tgt)) fail("bad arrow directive");
            if (a.src < 1 || a.src > sp.n_vertices || a.tgt < 1 || a.tgt > sp.n_vertices)
                fail("arrow endpoint out of range");
            if (arrow_id.count(a.name)) fail("duplicate arrow name " + a.name);
            --a.src;
            --a.tgt;
            arrow_id[a.name] = (int)sp.arrows.size();
            sp.arrows.push_back(a);
        } else if (kw == "relation") {
            std::string rest;
            std::getline(ls, rest);
            Relation rel;
            // split on '+' into terms "c*a.b.c"; a leading '-' on the
            // coefficient is allowed
            std::string term;
            std::istringstream ts(rest);
            std::vector<std::string> parts;
            std::string tok;
            std::string cur;
            for (char ch : rest) {
                if (ch == '+') {
                    parts.push_back(cur);
                    cur.clear();
                } else
                    cur.push_back(ch);
            }
            parts.push_back(cur);
            for (auto& part : parts) {
                std::string s;
                for (char ch : part)
                    if (!isspace((unsigned char)ch)) s.push_back(ch);
                if (s.empty()) fail("empty relation term");
                RelationTerm t;
                auto star = s.find('*');
                std::string pathstr = s;
                if (star != std::string::npos) {
                    try {
                        t.coeff = std::stoll(s.substr(0, star));
                    } catch (...) {
                        fail("bad coefficient in relation term " + s);
                    }
                    pathstr = s.substr(star + 1);
                }
                std::string name;
                auto flush = [&]() {
                    if (name.empty()) fail("empty arrow name in relation");
                    auto it = arrow_id.find(name);
                    if (it == arrow_id.end()) fail("unknown arrow " + name);
                    t.arrows.push_back(it->second);
                    name.clear();
                };
                for (char ch : pathstr) {
                    if (ch == '.')
                        flush();
                    else
                        name.push_back(ch);
                }
                flush();
                rel.terms.push_back(std::move(t));
            }
            sp.relations.push_back(std::move(rel));
        } else if (kw == "nilpotency") {
            if (!(ls >> sp.nilpotency) || sp.nilpotency < 1) fail("bad nilpotency directive");
        } else if (kw == "d") {
            if (!(ls >> sp.d) || sp.d < 2) fail("bad d directive");
        } else {
            fail("unknown directive " + kw);
        }
    }
    if (sp.n_vertices == 0) throw ParseError("missing vertices directive");
    return sp;
}

// An algebra element is a dense coefficient vector over the path basis.
using AlgElem = std::vector<i64>;

class QuiverAlgebra {
public:
    struct BasisPath {
        std::vector<int> arrows;  // travel order; empty = trivial path e_i
        int src = 0, tgt = 0;
    };

    int n = 0;               // vertices
    std::vector<Arrow> arrows;
    int nilpotency = 0;      // rad^N = 0
    int dim = 0;             // F_p dimension of Lambda
    std::vector<BasisPath> basis;      // length-lex ordered surviving paths
    std::vector<int> e;                // e[v] = basis index of trivial path at v

    explicit QuiverAlgebra(const AlgebraSpec& sp) { build(sp); }

    AlgElem zero() const { return AlgElem(dim, 0); }

    AlgElem unit_of(int basis_idx) const {
        AlgElem v(dim, 0);
        v[basis_idx] = 1;
        return v;
    }

    AlgElem idempotent(int vertex) const { return unit_of(e[vertex]); }

    AlgElem identity() const {
        AlgElem v(dim, 0);
        for (int i = 0; i < n; ++i) v[e[i]] = 1;
        return v;
    }

    // Product of basis elements, precomputed.
    const AlgElem& table(int i, int j) const { return mult_[(size_t)i * dim + j]; }

    AlgElem mul(const AlgElem& a, const AlgElem& b) const {
        AlgElem r(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (b[j] == 0) continue;
                i64 c = fp::mul(a[i], b[j]);
                const AlgElem& t = table(i, j);
                for (int k = 0; k < dim; ++k)
                    if (t[k] != 0) r[k] = fp::add(r[k], fp::mul(c, t[k]));
            }
        }
        return r;
    }

    static bool is_zero(const AlgElem& a) {
        for (i64 c : a)
            if (c != 0) return false;
        return true;
    }

    // Coefficient of the length-zero path at `vertex` (used for invertibility
    // of endomorphisms of P_vertex and for complex minimization).
    i64 scalar_part(const AlgElem& a, int vertex) const { return a[e[vertex]]; }

    bool in_radical(const AlgElem& a) const {
        for (int v = 0; v < n; ++v)
            if (a[e[v]] != 0) return false;
        return true;
    }

    // Basis of Hom(P_i, P_j) = e_j Lambda e_i: indices of basis paths j -> i.
    std::vector<int> hom_proj(int i, int j) const {
        std::vector<int> out;
        for (int b = 0; b < dim; ++b)
            if (basis[b].src == j && basis[b].tgt == i) out.push_back(b);
        return out;
    }

    // Cartan matrix C[i][j] = dim Hom(P_i, P_j).
    std::vector<std::vector<int>> cartan() const {
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (int b = 0; b < dim; ++b) ++c[basis[b].tgt][basis[b].src];
        return c;
    }

    // Inverse of a in the corner algebra e_v Lambda e_v (a must have nonzero
    // scalar part; the radical part is nilpotent so a is a unit there).
    AlgElem corner_inverse(const AlgElem& a, int v) const {
        std::vector<int> corner = hom_proj(v, v);  // paths v -> v
        Mat L((int)corner.size(), (int)corner.size());
        for (int c = 0; c < (int)corner.size(); ++c) {
            AlgElem prod = mul(a, unit_of(corner[c]));
            for (int r = 0; r < (int)corner.size(); ++r) L.at(r, c) = prod[corner[r]];
        }
        std::vector<i64> rhs(corner.size(), 0);
        for (int r = 0; r < (int)corner.size(); ++r)
            if (basis[corner[r]].arrows.empty()) rhs[r] = 1;  // e_v
        auto sol = solve(L, rhs);
        if (!sol) throw std::logic_error("corner element not invertible");
        AlgElem inv = zero();
        for (int c = 0; c < (int)corner.size(); ++c) inv[corner[c]] = (*sol)[c];
        return inv;
    }

private:
    std::vector<AlgElem> mult_;  // dim*dim products

    struct RawPath {
        std::vector<int> arrows;
        int src, tgt;
    };

    static constexpr int kPathCap = 100000;
    static constexpr int kLenCap = 64;

    void build(const AlgebraSpec& sp) {
        n = sp.n_vertices;
        arrows = sp.arrows;
        fp::set_modulus(sp.p);

        for (const auto& rel : sp.relations) {
            if (rel.terms.empty()) throw NotAdmissible("empty relation");
            int s = -1, t = -1;
            for (const auto& term : rel.terms) {
                if (term.arrows.size() < 2)
                    throw NotAdmissible("relation term of length < 2 (ideal not admissible)");
                int ts = arrows[term.arrows.front()].src;
                int tt = arrows[term.arrows.back()].tgt;
                for (size_t k = 0; k + 1 < term.arrows.size(); ++k)
                    if (arrows[term.arrows[k]].tgt != arrows[term.arrows[k + 1]].src)
                        throw NotAdmissible("relation term is not a composable path");
                if (s < 0) {
                    s = ts;
                    t = tt;
                } else if (s != ts || t != tt)
                    throw NotAdmissible("relation mixes paths with different endpoints");
            }
        }

        nilpotency = sp.nilpotency > 0 ? sp.nilpotency : infer_nilpotency(sp);

        // All paths of length < N, length-lex order.
        std::vector<RawPath> paths;
        std::map<std::vector<int>, int> path_id;
        for (int v = 0; v < n; ++v) paths.push_back({{}, v, v});
        size_t level_begin = 0;
        for (int len = 1; len < nilpotency; ++len) {
            size_t level_end = paths.size();
            for (size_t i = level_begin; i < level_end; ++i)
                for (int a = 0; a < (int)arrows.size(); ++a)
                    if (arrows[a].src == paths[i].tgt) {
                        RawPath q = paths[i];
                        q.arrows.push_back(a);
                        q.tgt = arrows[a].tgt;
                        paths.push_back(std::move(q));
                        if ((int)paths.size() > kPathCap)
                            throw NotFiniteDimensional("path count exceeds cap");
                    }
            level_begin = level_end;
        }
        // length-lex sort is already the construction order within levels,
        // but make it explicit and build the id map
        std::stable_sort(paths.begin(), paths.end(), [](const RawPath& a, const RawPath& b) {
            if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
            if (a.arrows != b.arrows) return a.arrows < b.arrows;
            return a.src < b.src;
        });
        for (size_t i = 0; i < paths.size(); ++i) {
            std::vector<int> key = paths[i].arrows;
            key.push_back(~paths[i].src);  // disambiguate trivial paths
            path_id[key] = (int)i;
        }
        auto id_of = [&](const std::vector<int>& arrs, int src) {
            std::vector<int> key = arrs;
            key.push_back(~src);
            auto it = path_id.find(key);
            return it == path_id.end() ? -1 : it->second;
        };

        int np = (int)paths.size();

        // Relation ideal restricted to paths of length < N: span of u*r*v with
        // length >= N components dropped (they are zero in Lambda anyway).
        Span ideal(np);
        for (const auto& rel : sp.relations) {
            int rs = arrows[rel.terms[0].arrows.front()].src;
            int rt = arrows[rel.terms[0].arrows.back()].tgt;
            for (int ui = 0; ui < np; ++ui) {
                if (paths[ui].tgt != rs) continue;
                for (int vi = 0; vi < np; ++vi) {
                    if (paths[vi].src != rt) continue;
                    std::vector<i64> vec(np, 0);
                    bool nonzero = false;
                    for (const auto& term : rel.terms) {
                        std::vector<int> arrs = paths[ui].arrows;
                        arrs.insert(arrs.end(), term.arrows.begin(), term.arrows.end());
                        arrs.insert(arrs.end(), paths[vi].arrows.begin(), paths[vi].arrows.end());
                        if ((int)arrs.size() >= nilpotency) continue;
                        int id = id_of(arrs, paths[ui].src);
                        if (id < 0) throw std::logic_error("path bookkeeping error");
                        vec[id] = fp::add(vec[id], term.coeff);
                        nonzero = true;
                    }
                    if (nonzero) ideal.insert(vec);
                }
            }
        }

        // Surviving (non-pivot) paths form the basis.
        std::vector<char> is_pivot(np, 0);
        for (int l : ideal.lead) is_pivot[l] = 1;
        std::vector<int> basis_of_path(np, -1);
        for (int i = 0; i < np; ++i)
            if (!is_pivot[i]) {
                basis_of_path[i] = dim++;
                basis.push_back({paths[i].arrows, paths[i].src, paths[i].tgt});
            }
        if (dim == 0) throw NotAdmissible("algebra collapsed to zero");
        e.assign(n, -1);
        for (int b = 0; b < dim; ++b)
            if (basis[b].arrows.empty()) e[basis[b].src] = b;
        for (int v = 0; v < n; ++v)
            if (e[v] < 0) throw NotAdmissible("trivial path killed by relations");

        // Normal form of a raw path index: reduce mod the ideal, read off
        // surviving coordinates.
        auto nf = [&](int pid) {
            std::vector<i64> v(np, 0);
            v[pid] = 1;
            v = ideal.residue(v);
            AlgElem out(dim, 0);
            for (int i = 0; i < np; ++i)
                if (v[i] != 0) {
                    if (basis_of_path[i] < 0) throw std::logic_error("residue hit pivot");
                    out[basis_of_path[i]] = v[i];
                }
            return out;
        };

        mult_.assign((size_t)dim * dim, AlgElem());
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                AlgElem prod = zero();
                if (basis[i].tgt == basis[j].src &&
                    (int)(basis[i].arrows.size() + basis[j].arrows.size()) < nilpotency) {
                    std::vector<int> arrs = basis[i].arrows;
                    arrs.insert(arrs.end(), basis[j].arrows.begin(), basis[j].arrows.end());
                    int id = id_of(arrs, basis[i].src);
                    if (id >= 0) prod = nf(id);
                    // id < 0 cannot happen: all short paths were enumerated
                }
                mult_[(size_t)i * dim + j] = std::move(prod);
            }

        // sanity: relations vanish
        for (const auto& rel : sp.relations) {
            AlgElem acc = zero();
            for (const auto& term : rel.terms) {
                AlgElem prod = idempotent(arrows[term.arrows.front()].src);
                for (int a : term.arrows) {
                    int aid = id_of({a}, arrows[a].src);
                    prod = mul(prod, nf(aid));
                }
                for (int k = 0; k < dim; ++k) acc[k] = fp::add(acc[k], fp::mul(term.coeff, prod[k]));
            }
            if (!is_zero(acc)) throw std::logic_error("relation does not vanish in quotient");
        }
    }

    // With monomial relations only, the nilpotency bound is 1 + the longest
    // path avoiding every relation monomial as a subword.  Otherwise the bound
    // is mandatory.
    int infer_nilpotency(const AlgebraSpec& sp) const {
        std::vector<std::vector<int>> monomials;
        for (const auto& rel : sp.relations) {
            if (rel.terms.size() != 1)
                throw NotFiniteDimensional(
                    "nilpotency bound is required when relations are not monomial");
            monomials.push_back(rel.terms[0].arrows);
        }
        auto contains_monomial = [&](const std::vector<int>& w) {
            for (const auto& m : monomials) {
                if (m.size() > w.size()) continue;
                for (size_t s = 0; s + m.size() <= w.size(); ++s)
                    if (std::equal(m.begin(), m.end(), w.begin() + s)) return true;
            }
            return false;
        };
        std::vector<std::pair<std::vector<int>, int>> frontier;  // (arrows, tgt)
        for (int v = 0; v < sp.n_vertices; ++v) frontier.push_back({{}, v});
        int len = 0;
        while (!frontier.empty()) {
            if (len >= kLenCap)
                throw NotFiniteDimensional("algebra appears infinite dimensional");
            std::vector<std::pair<std::vector<int>, int>> next;
            for (auto& [w, t] : frontier)
                for (int a = 0; a < (int)sp.arrows.size(); ++a)
                    if (sp.arrows[a].src == t) {
                        auto w2 = w;
                        w2.push_back(a);
                        if (!contains_monomial(w2)) next.push_back({std::move(w2), sp.arrows[a].tgt});
                    }
            if (next.empty()) break;
            ++len;
            frontier = std::move(next);
            if ((int)frontier.size() > kPathCap)
                throw NotFiniteDimensional("path count exceeds cap");
        }
        return len + 1;
    }
};

}  // namespace dsilt
