#ifndef ZETA27_FIELDTABLE_HPP
#define ZETA27_FIELDTABLE_HPP

// Table-backed arithmetic for the exact counting kernels. Elements of a
// field of size Q are carried as discrete logs (u32, with a sentinel for
// zero); multiplication is an index addition and addition is one Zech
// lookup, so the inner counting loops run in a handful of table hits.
//
// The root-census machinery answers "how many distinct roots does this
// degree <= 3 polynomial have" in O(1): a depressed cubic t^3 + pt + q with
// p, q nonzero has the scaling invariant u = p^3/q^2, and each invariant
// class contains t^3 + ut + u, whose roots are enumerated once for every u
// in a single pass over the field (t != -1 maps to u = -t^3/(t+1)).
// Characteristic 3 cannot be depressed and is handled by Artin-Schreier
// reduction instead.

#include "tower.hpp"

namespace zeta27 {

class FieldTable {
public:
    static constexpr u32 ZERO = 0xffffffffu;
    static constexpr u64 kMaxTableField = u64(1) << 22;

    const Field* F;
    u64 Q;
    u32 p;

    static const FieldTable& get(const Field& F) {
        if (F.size > kMaxTableField)
            fail(Error::Kind::budget, "field of size " + std::to_string(F.size) + " exceeds the table ceiling " + std::to_string(kMaxTableField));
        static std::mutex mu;
        static std::map<std::pair<u32, u32>, std::unique_ptr<FieldTable>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(F.p, F.k);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<FieldTable>(new FieldTable(F))).first;
        return *it->second;
    }

    // ---- representation ----
    u32 from_index(u64 idx) const { return log_[idx]; }
    u64 to_index(u32 a) const { return a == ZERO ? 0 : expt_[a]; }
    u32 from_fe(const Fe& x) const {
        return log_[F->index_of(x.F == F ? x : embed_into(x, *F))];
    }
    Fe to_fe(u32 a) const { return F->element(to_index(a)); }
    u32 from_int(i64 n) const {
        i64 r = n % i64(p);
        if (r < 0) r += p;
        return log_[u64(r)];
    }

    u32 one() const { return 0; }

    // ---- arithmetic on log representations ----
    u32 mul(u32 a, u32 b) const {
        if (a == ZERO || b == ZERO) return ZERO;
        u32 s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    u32 sq(u32 a) const { return mul(a, a); }
    u32 invl(u32 a) const {
        if (a == ZERO) fail(Error::Kind::divide_by_zero, "table inverse of zero");
        return a == 0 ? 0 : n_ - a;
    }
    u32 divl(u32 a, u32 b) const { return mul(a, invl(b)); }
    u32 add(u32 a, u32 b) const {
        if (a == ZERO) return b;
        if (b == ZERO) return a;
        u32 d = b >= a ? b - a : b + n_ - a;
        u32 z = zech_[d];
        if (z == ZERO) return ZERO;
        u32 s = a + z;
        return s >= n_ ? s - n_ : s;
    }
    u32 neg(u32 a) const {
        if (a == ZERO || p == 2) return a;
        u32 s = a + half_;
        return s >= n_ ? s - n_ : s;
    }
    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
    u32 powl(u32 a, u64 e) const {
        if (a == ZERO) return e == 0 ? 0 : ZERO;
        return u32((u64(a) * (e % n_)) % n_);
    }

    // quadratic character in {1, 0, -1}; odd characteristic
    int chi(u32 a) const {
        if (a == ZERO) return 0;
        return (a & 1) ? -1 : 1;
    }
    // one square root, or ZERO-marker via optional semantics
    bool sqrtl(u32 a, u32& out) const {
        if (a == ZERO) { out = ZERO; return true; }
        if (p == 2) { out = u32((u64(a) * (Q / 2)) % n_); return true; }
        if (a & 1) return false;
        out = a / 2;
        return true;
    }
    // trace to the prime field, as a residue in [0, p)
    u32 trace(u32 a) const { return a == ZERO ? 0 : trace_[expt_[a]]; }

    // ---- root censuses (distinct roots in this field) ----

    // roots (values) of a*t^2 + b*t + c with a != 0; returns the count
    int quad_solve(u32 a, u32 b, u32 c, u32 out[2]) const {
        if (p != 2) {
            u32 disc = sub(sq(b), mul(from_int(4), mul(a, c)));
            u32 den = invl(mul(from_int(2), a));
            if (disc == ZERO) { out[0] = mul(neg(b), den); return 1; }
            u32 r;
            if (!sqrtl(disc, r)) return 0;
            out[0] = mul(add(neg(b), r), den);
            out[1] = mul(sub(neg(b), r), den);
            return 2;
        }
        if (b == ZERO) {
            u32 r;
            sqrtl(divl(c, a), r);
            out[0] = r;
            return 1;
        }
        u32 ba = divl(b, a);
        u32 w = mul(mul(c, a), invl(sq(b)));
        if (w == ZERO) { out[0] = ZERO; out[1] = ba; return 2; } // t(at+b)
        u32 s = as2_[w];
        if (s == ZERO) return 0;
        out[0] = mul(ba, s);
        out[1] = mul(ba, add(s, 0)); // s + 1
        return 2;
    }

    // number of distinct roots of a*t^2 + b*t + c with a != 0
    u64 quad_census(u32 a, u32 b, u32 c) const {
        if (p != 2) {
            u32 disc = sub(sq(b), mul(from_int(4), mul(a, c)));
            int ch = chi(disc);
            return ch == 0 ? 1 : (ch == 1 ? 2 : 0);
        }
        if (b == ZERO) return 1; // squaring is bijective
        u32 w = mul(mul(c, a), invl(sq(b)));
        return trace(w) == 0 ? 2 : 0;
    }

    // number of distinct roots of c3*t^3 + c2*t^2 + c1*t + c0 (any degree;
    // the identically-zero polynomial has the whole line, Q roots)
    u64 cubic_census(u32 c3, u32 c2, u32 c1, u32 c0) const {
        if (c3 == ZERO) {
            if (c2 != ZERO) return quad_census(c2, c1, c0);
            if (c1 != ZERO) return 1;
            return c0 == ZERO ? Q : 0;
        }
        u32 a = divl(c2, c3), b = divl(c1, c3), c = divl(c0, c3);
        if (p == 3) return cubic3_char3(a, b, c);
        // depress with t -> t - a/3 (valid whenever p != 3)
        u32 pt = sub(b, mul(sq(a), inv3_));
        u32 qt = add(sub(c, mul(mul(a, b), inv3_)), mul(mul(a, mul(sq(a), inv27_)), from_int(2)));
        if (pt == ZERO && qt == ZERO) return 1;
        if (pt == ZERO) {
            // t^3 = -qt
            if (Q % 3 == 2) return 1;
            return (neg(qt) % 3 == 0) ? 3 : 0;
        }
        if (qt == ZERO) {
            // t (t^2 + pt)
            if (p == 2) return 2;
            return chi(neg(pt)) == 1 ? 3 : 1;
        }
        u64 u = (u64(pt) * 3 + 2 * (n_ - u64(qt))) % n_;
        return tab3_[u];
    }

private:
    u32 n_;    // Q - 1
    u32 half_; // log(-1) for odd Q
    u32 inv3_ = 0, inv27_ = 0;
    std::vector<u32> log_;   // element index -> log (ZERO for the zero element)
    std::vector<u32> expt_;  // log -> element index
    std::vector<u32> zech_;  // zech_[d] = log(1 + g^d), ZERO when that is 0
    std::vector<u32> trace_; // element index -> trace to F_p
    std::vector<u8> tab3_;   // census of t^3 + ut + u per log(u); empty in char 3
    std::vector<u32> as2_;   // char 2: a root of s^2 + s = w per log(w), ZERO if none

    u64 cubic3_char3(u32 a, u32 b, u32 c) const {
        if (a == ZERO) {
            // t^3 + bt + c is additive in t
            if (b == ZERO) return 1; // Frobenius is bijective
            int ch = chi(neg(b));
            if (ch != 1) return 1;
            u32 beta;
            sqrtl(neg(b), beta); // chi said it exists
            u32 w = divl(neg(c), mul(beta, sq(beta)));
            return trace(w) == 0 ? 3 : 0;
        }
        // shift kills the linear term: s = b/a
        u32 s = (b == ZERO) ? ZERO : divl(b, a);
        u32 cp;
        if (s == ZERO) {
            cp = c;
        } else {
            u32 s2 = sq(s);
            cp = add(add(mul(s, s2), mul(a, s2)), add(mul(b, s), c));
        }
        u32 w = divl(neg(cp), mul(a, sq(a)));
        if (w == ZERO) return 2; // v^2 (v+1)
        if (chi(w) == -1) return 1;
        u32 sw;
        sqrtl(w, sw);
        return trace(sw) == 0 ? 3 : 0;
    }

    explicit FieldTable(const Field& f) : F(&f), Q(f.size), p(f.p) {
        n_ = u32(Q - 1);
        half_ = (p == 2) ? 0 : n_ / 2;
        log_.assign(Q, ZERO);
        expt_.assign(n_ ? n_ : 1, 0);
        // primitive element: smallest in element order
        Fe g = F->one();
        for (u64 idx = 2; idx < Q; ++idx) {
            Fe cand = F->element(idx);
            if (element_order(cand) == Q - 1) { g = cand; break; }
        }
        if (Q == 2) g = F->one();
        Fe acc = F->one();
        for (u32 e = 0; e < n_; ++e) {
            u64 idx = F->index_of(acc);
            log_[idx] = e;
            expt_[e] = u32(idx);
            acc = acc * g;
        }
        // Zech logs: index arithmetic adds 1 to the lowest base-p digit
        zech_.assign(n_ ? n_ : 1, ZERO);
        for (u32 e = 0; e < n_; ++e) {
            u64 idx = expt_[e];
            u64 c0 = idx % p;
            u64 idx1 = idx - c0 + (c0 + 1) % p;
            zech_[e] = log_[idx1];
        }
        // traces of the power basis, then per element by linearity
        trace_.assign(Q, 0);
        {
            std::vector<u32> basis_tr(F->k);
            for (u32 i = 0; i < F->k; ++i) {
                Fe bi = pow(F->gen(), i);
                if (F->k == 1) bi = F->one();
                Fe t = F->zero();
                Fe fr = bi;
                for (u32 j = 0; j < F->k; ++j) {
                    t = t + fr;
                    fr = frobenius(fr, 1);
                }
                basis_tr[i] = t.c[0];
            }
            for (u64 idx = 0; idx < Q; ++idx) {
                u64 m = idx;
                u64 t = 0;
                for (u32 i = 0; i < F->k && m; ++i) {
                    t += u64(m % p) * basis_tr[i];
                    m /= p;
                }
                trace_[idx] = u32(t % p);
            }
        }
        if (p == 2) {
            as2_.assign(n_ ? n_ : 1, ZERO);
            for (u32 s = 0; s < n_; ++s) {
                u32 w = add(sq(s), s);
                if (w != ZERO) as2_[w] = s;
            }
        }
        if (p != 3) {
            inv3_ = log_[F->index_of(inv(F->from_int(3)))];
            inv27_ = mul(inv3_, mul(inv3_, inv3_));
            // census of the one-parameter family t^3 + ut + u: every root t
            // (never t = -1, never t = 0) lands on u = -t^3/(t+1)
            tab3_.assign(n_ ? n_ : 1, 0);
            for (u32 lt = 0; lt < n_; ++lt) {
                u32 tp1 = add(lt, 0); // t + 1
                if (tp1 == ZERO) continue;
                u32 u = neg(divl(mul(lt, sq(lt)), tp1));
                ++tab3_[u];
            }
        }
    }
};

} // namespace zeta27

#endif
