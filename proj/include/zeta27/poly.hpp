#ifndef ZETA27_POLY_HPP
#define ZETA27_POLY_HPP

// Univariate polynomials over a field, and exact root extraction inside a
// chosen field: gcd against x^|F| - x isolates the distinct rational roots,
// then seeded equal-degree splitting peels them apart. No factorization
// beyond what root finding needs.

#include <algorithm>
#include <functional>

#include "field.hpp"

namespace zeta27 {

struct UniPoly {
    const Field* F = nullptr;
    std::vector<Fe> c; // low to high, trailing zeros trimmed; empty = zero

    static UniPoly zero(const Field& F) { return UniPoly{&F, {}}; }
    static UniPoly from(const Field& F, std::vector<Fe> cs) {
        UniPoly r{&F, std::move(cs)};
        r.trim();
        return r;
    }
    static UniPoly x(const Field& F) { return from(F, {F.zero(), F.one()}); }
    static UniPoly constant(const Fe& a) { return from(*a.F, {a}); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is the sentinel -1
    int degree() const { return int(c.size()) - 1; }
    Fe lead() const { return c.back(); }
    Fe coeff(size_t i) const { return i < c.size() ? c[i] : F->zero(); }

    bool operator==(const UniPoly& o) const { return F == o.F && c == o.c; }

    Fe eval(const Fe& a) const {
        Fe r = F->zero();
        for (size_t i = c.size(); i-- > 0;) r = r * a + c[i];
        return r;
    }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Fe> r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) + b.coeff(i));
    return UniPoly::from(*a.F, std::move(r));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Fe> r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) - b.coeff(i));
    return UniPoly::from(*a.F, std::move(r));
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(*a.F);
    std::vector<Fe> r(a.c.size() + b.c.size() - 1, a.F->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
    return UniPoly::from(*a.F, std::move(r));
}

inline UniPoly operator*(const Fe& s, const UniPoly& a) {
    std::vector<Fe> r = a.c;
    for (auto& x : r) x = s * x;
    return UniPoly::from(*a.F, std::move(r));
}

// quotient and remainder; divisor must be nonzero
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(Error::Kind::divide_by_zero, "polynomial division by zero");
    UniPoly rem = a, quo = UniPoly::zero(*a.F);
    Fe linv = inv(b.lead());
    std::vector<Fe> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, a.F->zero());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Fe coef = rem.lead() * linv;
        size_t shift = size_t(rem.degree() - b.degree());
        q[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = rem.c[shift + i] - coef * b.c[i];
        rem.trim();
    }
    return {UniPoly::from(*a.F, std::move(q)), rem};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

inline UniPoly make_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return inv(a.lead()) * a;
}

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return make_monic(a);
}

inline UniPoly derivative(const UniPoly& a) {
    if (a.c.size() <= 1) return UniPoly::zero(*a.F);
    std::vector<Fe> r(a.c.size() - 1, a.F->zero());
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.F->from_int(i64(i)) * a.c[i];
    return UniPoly::from(*a.F, std::move(r));
}

inline UniPoly powmod(UniPoly base, u64 e, const UniPoly& m) {
    UniPoly r = UniPoly::constant(m.F->one());
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

// Resultant via the Euclidean remainder sequence, tracking degree drops.
inline Fe resultant(UniPoly a, UniPoly b) {
    const Field& F = *a.F;
    Fe r = F.one();
    if (a.is_zero() || b.is_zero()) return F.zero();
    while (true) {
        if (b.degree() == 0) {
            return r * pow(b.c[0], u64(a.degree()));
        }
        UniPoly rem = a % b;
        if (rem.is_zero()) return F.zero();
        // res(a, b) = lc(b)^(deg a - deg rem) * (-1)^(deg a * deg b) * res(b, rem)
        r = r * pow(b.lead(), u64(a.degree() - rem.degree()));
        if ((u64(a.degree()) * u64(b.degree())) % 2 == 1 && F.p != 2) r = -r;
        a = b;
        b = rem;
    }
}

namespace detail {

struct SplitRng {
    u64 s;
    explicit SplitRng(u64 seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

inline u64 poly_seed(const UniPoly& f) {
    u64 h = 1469598103934665603ull;
    auto mix = [&](u64 v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(f.F->p);
    mix(f.F->k);
    for (const Fe& a : f.c)
        for (u32 d : a.c) mix(d);
    return h;
}

// Split a squarefree product of linear factors into roots. Probabilistic
// splitting with the seeded generator, so results are identical run to run.
inline void split_linear(const UniPoly& g, SplitRng& rng, std::vector<Fe>& out) {
    const Field& F = *g.F;
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-(g.c[0] / g.c[1]));
        return;
    }
    UniPoly one = UniPoly::constant(F.one());
    for (int attempt = 0; attempt < 256; ++attempt) {
        UniPoly h = UniPoly::zero(F);
        if (F.p != 2) {
            Fe a = F.element(rng.next() % F.size);
            UniPoly shifted = UniPoly::from(F, {a, F.one()});
            h = powmod(shifted, (F.size - 1) / 2, g) - one;
        } else {
            // trace map sum_{i<m} (c x)^{2^i} splits over even-order fields
            Fe cmul = F.element(rng.next() % F.size);
            UniPoly cx = UniPoly::from(F, {F.zero(), cmul});
            UniPoly term = cx % g, acc = term;
            u64 bits = 0;
            for (u64 s = F.size; s > 1; s >>= 1) ++bits;
            for (u64 i = 1; i < bits; ++i) {
                term = (term * term) % g;
                acc = acc + term;
            }
            h = acc;
        }
        UniPoly d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, rng, out);
            split_linear(g / d, rng, out);
            return;
        }
    }
    fail(Error::Kind::internal, "equal-degree splitting failed to converge");
}

} // namespace detail

// All roots of f inside the given field, exactly. f must be nonzero, with
// coefficients in (a subfield of) the target handled by the caller.
inline std::vector<Fe> find_roots(const UniPoly& f) {
    if (f.is_zero()) fail(Error::Kind::domain, "find_roots: zero polynomial");
    const Field& F = *f.F;
    if (f.degree() == 0) return {};
    UniPoly x = UniPoly::x(F);
    UniPoly xq = powmod(x, F.size, f);
    UniPoly g = gcd(f, xq - x); // distinct rational roots, each once
    std::vector<Fe> roots;
    detail::SplitRng rng(detail::poly_seed(f));
    detail::split_linear(g, rng, roots);
    std::sort(roots.begin(), roots.end(), [&](const Fe& a, const Fe& b) {
        return F.index_of(a) < F.index_of(b);
    });
    return roots;
}

} // namespace zeta27

#endif
