// fppoly.hpp -- univariate polynomial arithmetic over F_p, with just enough
// factorization (square-free part, distinct-degree and equal-degree splitting)
// to find a nontrivial coprime splitting of a minimal polynomial.  That is all
// the Krull-Schmidt machinery needs to manufacture idempotents.
#pragma once

#include <random>
#include <vector>

#include "fp.hpp"

namespace dsilt {

// Coefficients low-to-high; normalized so the leading coefficient is nonzero.
using Poly = std::vector<i64>;

namespace poly {

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return (int)f.size() - 1; }  // deg(0) = -1

inline Poly make_monic(Poly f) {
    trim(f);
    if (f.empty()) return f;
    i64 iv = fp::inv(f.back());
    for (auto& c : f) c = fp::mul(c, iv);
    return f;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp::add(r[i], b[i]);
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp::sub(r[i], b[i]);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp::add(r[i + j], fp::mul(a[i], b[j]));
    trim(r);
    return r;
}

// (quotient, remainder) with b != 0.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    i64 linv = fp::inv(b.back());
    for (int i = (int)a.size() - (int)b.size(); i >= 0; --i) {
        i64 c = fp::mul(a[i + b.size() - 1], linv);
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            a[i + j] = fp::sub(a[i + j], fp::mul(c, b[j]));
    }
    trim(a);
    return {q, a};
}

inline Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

inline Poly derivative(const Poly& f) {
    Poly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(fp::mul((i64)(i % fp::modulus()), f[i]));
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(mul(a, b), m); }

// a^e mod m with a big exponent (p^d fits in unsigned __int128 for small d).
inline Poly powmod(Poly a, unsigned __int128 e, const Poly& m) {
    Poly r{1};
    a = mod(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// A nontrivial coprime splitting f = g*h (g,h monic nonconstant), if f is
// reducible; nullopt if f is irreducible.  f must be monic and square-free.
inline std::optional<std::pair<Poly, Poly>> split_squarefree(const Poly& f,
                                                             std::mt19937_64& rng) {
    int n = deg(f);
    if (n <= 1) return std::nullopt;
    i64 p = fp::modulus();
    // distinct-degree: peel off the product of irreducible factors of degree i
    Poly x{0, 1};
    Poly h = x;  // x^{p^i} mod f, built incrementally
    Poly rem = f;
    for (int i = 1; 2 * i <= n; ++i) {
        h = powmod(h, (unsigned __int128)p, f);
        Poly g = gcd(sub(h, x), rem);
        if (deg(g) > 0 && deg(g) < deg(rem)) {
            auto [q, r] = divmod(rem, g);
            (void)r;
            return std::make_pair(make_monic(g), make_monic(q));
        }
        if (deg(g) == deg(rem)) {
            // all remaining factors have degree i: equal-degree splitting
            if (deg(rem) == i) return std::nullopt;  // single factor left
            unsigned __int128 e = 1;
            for (int k = 0; k < i; ++k) e *= (unsigned __int128)p;
            e = (e - 1) / 2;
            for (int tries = 0; tries < 200; ++tries) {
                Poly a(deg(rem), 0);
                for (auto& c : a) c = (i64)(rng() % (unsigned long long)p);
                trim(a);
                if (deg(a) < 1) continue;
                Poly b = powmod(a, e, rem);
                b = sub(b, Poly{1});
                Poly g2 = gcd(b, rem);
                if (deg(g2) > 0 && deg(g2) < deg(rem)) {
                    auto [q2, r2] = divmod(rem, g2);
                    (void)r2;
                    Poly other = make_monic(q2);
                    // reassemble against the full f (rem may be proper divisor)
                    auto [qf, rf] = divmod(f, g2);
                    (void)rf;
                    return std::make_pair(make_monic(g2), make_monic(qf));
                }
            }
            return std::nullopt;  // overwhelmingly unlikely for p = 10007
        }
    }
    return std::nullopt;  // irreducible
}

}  // namespace poly
}  // namespace dsilt
