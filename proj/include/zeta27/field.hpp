#ifndef ZETA27_FIELD_HPP
#define ZETA27_FIELD_HPP

// Exact arithmetic in prime fields F_p and their extensions F_{p^k}.
//
// An extension is represented by a canonical modulus: the monic irreducible
// of degree k over F_p whose coefficient list (c_0,...,c_{k-1}), read as the
// base-p integer sum c_i p^i, is smallest. Elements are coefficient vectors
// with respect to the power basis of that modulus, always reduced, so every
// element has exactly one representation and equality is componentwise.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace zeta27 {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Field;

// Field element: coefficients w.r.t. the power basis, entries in [0, p),
// length k. Immutable in practice; all operations return fresh values.
struct Fe {
    const Field* F = nullptr;
    std::vector<u32> c;

    bool is_zero() const {
        for (u32 x : c)
            if (x) return false;
        return true;
    }
    bool operator==(const Fe& o) const { return F == o.F && c == o.c; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
};

namespace detail {

// Dense polynomials over F_p as coefficient vectors (low to high), used for
// modulus search and element arithmetic. Always trimmed.
inline void ptrim(std::vector<u32>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<u32> pmul(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += u64(a[i]) * b[j];
    }
    std::vector<u32> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = u32(acc[i] % p);
    ptrim(r);
    return r;
}

inline void pmod(std::vector<u32>& a, const std::vector<u32>& m, u32 p) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        u32 lead = a.back();
        if (lead == 0) { a.pop_back(); continue; }
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = u32((u64(a[shift + i]) + u64(p) - (u64(lead) * m[i]) % p) % p);
        ptrim(a);
    }
}

inline std::vector<u32> padd(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
    std::vector<u32> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 v = (i < a.size() ? a[i] : 0) + u64(i < b.size() ? b[i] : 0);
        r[i] = u32(v % p);
    }
    ptrim(r);
    return r;
}

inline std::vector<u32> psub(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
    std::vector<u32> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
        r[i] = u32((av + p - bv) % p);
    }
    ptrim(r);
    return r;
}

inline u32 modinv_u32(u32 a, u32 p) {
    // extended Euclid in integers
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) fail(Error::Kind::divide_by_zero, "not invertible mod p");
    return u32(t < 0 ? t + p : t);
}

inline std::vector<u32> ppowmod(std::vector<u32> base, u64 e, const std::vector<u32>& m, u32 p) {
    std::vector<u32> r{1};
    pmod(base, m, p);
    while (e) {
        if (e & 1) { r = pmul(r, base, p); pmod(r, m, p); }
        base = pmul(base, base, p);
        pmod(base, m, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<u32> pgcd(std::vector<u32> a, std::vector<u32> b, u32 p) {
    ptrim(a); ptrim(b);
    while (!b.empty()) {
        // make b monic before reducing
        u32 inv = modinv_u32(b.back(), p);
        for (auto& x : b) x = u32(u64(x) * inv % p);
        pmod(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u32 inv = modinv_u32(a.back(), p);
        for (auto& x : a) x = u32(u64(x) * inv % p);
    }
    return a;
}

inline bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducibility of a monic degree-k polynomial over F_p.
inline bool irreducible(const std::vector<u32>& f, u32 p) {
    u32 k = u32(f.size() - 1);
    if (k == 0) return false;
    if (k == 1) return true;
    std::vector<u32> x{0, 1};
    // h_j = x^{p^j} mod f
    std::vector<std::vector<u32>> h(k + 1);
    h[0] = x;
    for (u32 j = 1; j <= k; ++j) h[j] = ppowmod(h[j - 1], p, f, p);
    if (psub(h[k], x, p) != std::vector<u32>{}) return false;
    for (u32 r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime_u32(r)) continue;
        auto d = pgcd(psub(h[k / r], x, p), f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

} // namespace detail

// An immutable description of F_{p^k}. Instances are interned: Field::get
// returns a stable reference, so element ownership is a bare pointer.
class Field {
public:
    u32 p;
    u32 k;
    std::vector<u32> modulus; // monic, length k+1; {0,1} (i.e. x) when k == 1
    u64 size;                 // p^k

    static const Field& get(u32 p, u32 k) {
        if (!detail::is_prime_u32(p)) fail(Error::Kind::domain, "field characteristic must be prime, got " + std::to_string(p));
        if (k < 1) fail(Error::Kind::domain, "extension degree must be >= 1");
        static std::mutex mu;
        static std::map<std::pair<u32, u32>, std::unique_ptr<Field>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, k);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, k))).first;
        return *it->second;
    }

    u64 q() const { return size; }

    Fe zero() const { return Fe{this, std::vector<u32>(k, 0)}; }
    Fe one() const { return from_int(1); }
    Fe from_int(i64 n) const {
        i64 r = n % i64(p);
        if (r < 0) r += p;
        std::vector<u32> c(k, 0);
        c[0] = u32(r);
        return Fe{this, std::move(c)};
    }
    // class of x; only meaningful for k >= 2 (returns 1 for prime fields,
    // where the power basis is just {1})
    Fe gen() const {
        if (k == 1) return one();
        std::vector<u32> c(k, 0);
        c[1] = 1;
        return Fe{this, std::move(c)};
    }
    Fe from_coeffs(std::vector<u32> c) const {
        if (c.size() != k) fail(Error::Kind::domain, "coefficient list has wrong length");
        for (auto& x : c) x %= p;
        return Fe{this, std::move(c)};
    }

    // Deterministic element order: index n has coefficients equal to the
    // base-p digits of n, c_0 least significant. "Smallest" always refers
    // to this order.
    Fe element(u64 n) const {
        std::vector<u32> c(k, 0);
        for (u32 i = 0; i < k && n; ++i) {
            c[i] = u32(n % p);
            n /= p;
        }
        return Fe{this, std::move(c)};
    }
    u64 index_of(const Fe& a) const {
        u64 n = 0;
        for (u32 i = k; i-- > 0;) n = n * p + a.c[i];
        return n;
    }

private:
    Field(u32 p_, u32 k_) : p(p_), k(k_) {
        u64 s = 1;
        for (u32 i = 0; i < k; ++i) {
            if (s > (u64(1) << 62) / p) fail(Error::Kind::unsupported, "field size exceeds 2^62");
            s *= p;
        }
        size = s;
        if (k == 1) {
            modulus = {0, 1};
            return;
        }
        // Smallest monic irreducible of degree k, candidates ordered by the
        // base-p value of the non-leading coefficients.
        for (u64 n = 0; n < size; ++n) {
            std::vector<u32> f(k + 1, 0);
            u64 m = n;
            for (u32 i = 0; i < k; ++i) {
                f[i] = u32(m % p);
                m /= p;
            }
            f[k] = 1;
            if (detail::irreducible(f, p)) {
                modulus = std::move(f);
                return;
            }
        }
        fail(Error::Kind::internal, "no irreducible modulus found"); // unreachable
    }
};

inline void check_same_field(const Fe& a, const Fe& b) {
    if (a.F != b.F) fail(Error::Kind::domain, "operands live in different fields");
}

inline Fe operator+(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    Fe r{a.F, std::vector<u32>(a.c.size())};
    u32 p = a.F->p;
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = (a.c[i] + b.c[i]) % p;
    return r;
}

inline Fe operator-(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    Fe r{a.F, std::vector<u32>(a.c.size())};
    u32 p = a.F->p;
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = (a.c[i] + p - b.c[i]) % p;
    return r;
}

inline Fe operator-(const Fe& a) {
    Fe r{a.F, std::vector<u32>(a.c.size())};
    u32 p = a.F->p;
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] ? p - a.c[i] : 0;
    return r;
}

inline Fe operator*(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    const Field& F = *a.F;
    if (F.k == 1) return Fe{a.F, {u32(u64(a.c[0]) * b.c[0] % F.p)}};
    auto prod = detail::pmul(a.c, b.c, F.p);
    detail::pmod(prod, F.modulus, F.p);
    prod.resize(F.k, 0);
    return Fe{a.F, std::move(prod)};
}

inline Fe inv(const Fe& a) {
    if (a.is_zero()) fail(Error::Kind::divide_by_zero, "division by zero");
    const Field& F = *a.F;
    if (F.k == 1) return Fe{a.F, {detail::modinv_u32(a.c[0], F.p)}};
    // extended Euclid in F_p[x] against the modulus
    std::vector<u32> r0 = F.modulus, r1 = a.c, s0 = {}, s1 = {1};
    detail::ptrim(r1);
    u32 p = F.p;
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<u32> q;
        std::vector<u32> rem = r0;
        u32 linv = detail::modinv_u32(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            u32 coef = u32(u64(rem.back()) * linv % p);
            size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = coef;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = u32((rem[shift + i] + u64(p) - u64(coef) * r1[i] % p) % p);
            detail::ptrim(rem);
        }
        auto s2 = detail::psub(s0, detail::pmul(q, s1, p), p);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = s2;
    }
    // r0 = gcd (a unit since the modulus is irreducible)
    u32 ginv = detail::modinv_u32(r0.empty() ? 1 : r0[0], p);
    for (auto& x : s0) x = u32(u64(x) * ginv % p);
    s0.resize(F.k, 0);
    return Fe{a.F, std::move(s0)};
}

inline Fe operator/(const Fe& a, const Fe& b) { return a * inv(b); }

inline Fe pow(const Fe& a, u64 e) {
    Fe r = a.F->one(), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// a ^ (p^e); repeated p-th powers keep the exponent small even when p^e
// does not fit an integer type.
inline Fe frobenius(const Fe& a, u32 e) {
    Fe r = a;
    for (u32 i = 0; i < e; ++i) r = pow(r, a.F->p);
    return r;
}

// Multiplicative order; the field must be small enough that factoring
// size-1 by trial division is fine (always true here).
inline u64 element_order(const Fe& a) {
    if (a.is_zero()) fail(Error::Kind::domain, "zero has no multiplicative order");
    u64 n = a.F->size - 1;
    u64 ord = n;
    u64 m = n;
    for (u64 d = 2; d * d <= m; ++d) {
        while (m % d == 0) m /= d;
        if (n % d == 0)
            while (ord % d == 0 && pow(a, ord / d) == a.F->one()) ord /= d;
    }
    if (m > 1 && n % m == 0)
        while (ord % m == 0 && pow(a, ord / m) == a.F->one()) ord /= m;
    return ord;
}

// a^((|F|-1)/2) read in {1, 0, -1}. Odd characteristic only.
inline int quadratic_character(const Fe& a) {
    if (a.F->p == 2) fail(Error::Kind::unsupported, "quadratic character needs odd characteristic");
    if (a.is_zero()) return 0;
    Fe v = pow(a, (a.F->size - 1) / 2);
    if (v == a.F->one()) return 1;
    return -1;
}

// Smallest non-square in the element order. Odd field size required.
inline Fe find_nonsquare(const Field& F) {
    if (F.p == 2) fail(Error::Kind::unsupported, "every element of an even-order field is a square");
    for (u64 n = 2; n < F.size; ++n) {
        Fe a = F.element(n);
        if (quadratic_character(a) == -1) return a;
    }
    fail(Error::Kind::internal, "no non-square found");
}

// Square root by Tonelli-Shanks, deterministic via find_nonsquare.
// Returns nothing when a is a non-square; refuses characteristic 2.
inline std::optional<Fe> sqrt(const Fe& a) {
    const Field& F = *a.F;
    if (F.p == 2) fail(Error::Kind::unsupported, "sqrt in characteristic 2 is out of scope");
    if (a.is_zero()) return a;
    if (quadratic_character(a) != 1) return std::nullopt;
    u64 q1 = F.size - 1;
    u64 s = 0, t = q1;
    while (t % 2 == 0) { t /= 2; ++s; }
    Fe z = find_nonsquare(F);
    Fe c = pow(z, t);
    Fe x = pow(a, (t + 1) / 2);
    Fe b = pow(a, t);
    u64 m = s;
    while (!(b == F.one())) {
        u64 i = 0;
        Fe bb = b;
        while (!(bb == F.one())) { bb = bb * bb; ++i; }
        Fe e = c;
        for (u64 j = 0; j + i + 1 < m; ++j) e = e * e;
        x = x * e;
        c = e * e;
        b = b * c;
        m = i;
    }
    return x;
}

// Number of cube roots of a in its field: 1 for all a when |F| == 2 mod 3
// or in characteristic 3; otherwise 0 or 3 for nonzero a, and 1 for a = 0.
inline int cube_root_census(const Fe& a) {
    const Field& F = *a.F;
    if (a.is_zero()) return 1;
    if (F.p == 3 || F.size % 3 == 2) return 1;
    Fe v = pow(a, (F.size - 1) / 3);
    return v == F.one() ? 3 : 0;
}

inline std::string to_string(const Fe& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + "]";
}

} // namespace zeta27

#endif
