#ifndef ZETA27_FORMS_HPP
#define ZETA27_FORMS_HPP

// Dense homogeneous forms in up to four variables over a field, with the
// handful of symbolic operations the geometry needs: evaluation, formal
// partials, linear substitution, products, and slicing off powers of one
// variable. The monomial order is fixed once (graded lexicographic within a
// degree, earlier variables first) and shared with the file format.

#include <array>
#include <functional>
#include <span>

#include "tower.hpp"

namespace zeta27 {

using Expo = std::array<u8, 4>; // unused variables carry exponent 0

inline const std::vector<Expo>& monomials(u32 nvars, u32 deg) {
    static std::mutex mu;
    static std::map<std::pair<u32, u32>, std::vector<Expo>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, deg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Expo> list;
    std::function<void(u32, u32, Expo)> rec = [&](u32 var, u32 left, Expo e) {
        if (var + 1 == nvars) {
            e[var] = u8(left);
            list.push_back(e);
            return;
        }
        for (int d = int(left); d >= 0; --d) {
            e[var] = u8(d);
            rec(var + 1, left - u32(d), e);
        }
    };
    rec(0, deg, Expo{0, 0, 0, 0});
    return cache.emplace(key, std::move(list)).first->second;
}

struct Form {
    const Field* F = nullptr;
    u32 nvars = 0;
    u32 deg = 0;
    std::vector<Fe> c; // aligned with monomials(nvars, deg)

    static Form zero(const Field& F, u32 nvars, u32 deg) {
        Form f{&F, nvars, deg, {}};
        f.c.assign(monomials(nvars, deg).size(), F.zero());
        return f;
    }

    bool is_zero() const {
        for (const Fe& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    const std::vector<Expo>& monos() const { return monomials(nvars, deg); }

    Fe& at(const Expo& e) {
        const auto& ms = monos();
        for (size_t i = 0; i < ms.size(); ++i)
            if (ms[i] == e) return c[i];
        fail(Error::Kind::internal, "monomial not found");
    }
    const Fe& at(const Expo& e) const { return const_cast<Form*>(this)->at(e); }

    Fe eval(std::span<const Fe> pt) const {
        const Field& K = *pt[0].F;
        Fe r = K.zero();
        const auto& ms = monos();
        for (size_t i = 0; i < ms.size(); ++i) {
            if (c[i].is_zero()) continue;
            Fe term = c[i].F == &K ? c[i] : embed_into(c[i], K);
            for (u32 v = 0; v < nvars; ++v)
                for (u8 e = 0; e < ms[i][v]; ++e) term = term * pt[v];
            r = r + term;
        }
        return r;
    }

    Form derivative(u32 var) const {
        if (deg == 0) return zero(*F, nvars, 0);
        Form d = zero(*F, nvars, deg - 1);
        const auto& ms = monos();
        const auto& ds = d.monos();
        for (size_t i = 0; i < ms.size(); ++i) {
            if (c[i].is_zero() || ms[i][var] == 0) continue;
            Expo e = ms[i];
            Fe coef = F->from_int(e[var]) * c[i];
            e[var] -= 1;
            for (size_t j = 0; j < ds.size(); ++j)
                if (ds[j] == e) {
                    d.c[j] = d.c[j] + coef;
                    break;
                }
        }
        return d;
    }

    // coefficient form of var^e: collect monomials with exponent exactly e
    // in var, drop that variable (remaining nvars-1 variables keep order)
    Form slice(u32 var, u32 e) const {
        if (e > deg) fail(Error::Kind::domain, "slice exponent exceeds degree");
        Form s = zero(*F, nvars - 1, deg - e);
        const auto& ms = monos();
        const auto& ss = s.monos();
        for (size_t i = 0; i < ms.size(); ++i) {
            if (c[i].is_zero() || ms[i][var] != e) continue;
            Expo r{0, 0, 0, 0};
            u32 w = 0;
            for (u32 v = 0; v < nvars; ++v)
                if (v != var) r[w++] = ms[i][v];
            for (size_t j = 0; j < ss.size(); ++j)
                if (ss[j] == r) {
                    s.c[j] = c[i];
                    break;
                }
        }
        return s;
    }

    Form operator+(const Form& o) const {
        Form r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
        return r;
    }
    Form operator-(const Form& o) const {
        Form r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
        return r;
    }
    Form scaled(const Fe& s) const {
        Form r = *this;
        for (auto& x : r.c) x = s * x;
        return r;
    }

    Form operator*(const Form& o) const {
        Form r = zero(*F, nvars, deg + o.deg);
        const auto& ma = monos();
        const auto& mb = o.monos();
        const auto& mr = r.monos();
        std::map<Expo, size_t> where;
        for (size_t k = 0; k < mr.size(); ++k) where[mr[k]] = k;
        for (size_t i = 0; i < ma.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < mb.size(); ++j) {
                if (o.c[j].is_zero()) continue;
                Expo e{0, 0, 0, 0};
                for (u32 v = 0; v < nvars; ++v) e[v] = u8(ma[i][v] + mb[j][v]);
                size_t k = where.at(e);
                r.c[k] = r.c[k] + c[i] * o.c[j];
            }
        }
        return r;
    }

    // substitute x_i = sum_j M[i][j] y_j; result has new_nvars variables
    // over the field of the matrix entries (which must contain F's image)
    Form subst_linear(const std::vector<std::vector<Fe>>& M, u32 new_nvars) const {
        const Field& K = *M[0][0].F;
        Form r = zero(K, new_nvars, deg);
        // linear forms per old variable
        std::vector<Form> lin(nvars);
        for (u32 v = 0; v < nvars; ++v) {
            lin[v] = Form::zero(K, new_nvars, 1);
            for (u32 j = 0; j < new_nvars; ++j) lin[v].c[j] = M[v][j];
        }
        const auto& ms = monos();
        for (size_t i = 0; i < ms.size(); ++i) {
            if (c[i].is_zero()) continue;
            Form term = Form::zero(K, new_nvars, 0);
            term.c[0] = embed_into(c[i], K);
            for (u32 v = 0; v < nvars; ++v)
                for (u8 e = 0; e < ms[i][v]; ++e) term = term * lin[v];
            r = r + term;
        }
        return r;
    }

    // deterministic projective normalization: divide by the first nonzero
    // coefficient
    Form normalized() const {
        for (const Fe& x : c)
            if (!x.is_zero()) return scaled(inv(x));
        return *this;
    }

    Form mapped(const Field& K) const {
        Form r = zero(K, nvars, deg);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = embed_into(c[i], K);
        return r;
    }
};

// A cubic surface form is a nonzero Form(4, 3); a plane cubic is a nonzero
// Form(3, 3). Thin aliases keep signatures readable.
using CubicSurfaceForm = Form;
using PlaneCubicForm = Form;

inline Form cubic_surface(const Field& F) { return Form::zero(F, 4, 3); }
inline Form plane_cubic(const Field& F) { return Form::zero(F, 3, 3); }

// t^2 * L(x,y,z) + C(x,y,z) as a quaternary cubic (t is the last variable)
inline Form assemble_t2L_plus_C(const Form& L, const Form& C) {
    if (L.nvars != 3 || L.deg != 1 || C.nvars != 3 || C.deg != 3)
        fail(Error::Kind::domain, "assemble: want a ternary linear and a ternary cubic");
    Form X = Form::zero(*C.F, 4, 3);
    const auto& xm = X.monos();
    auto put = [&](const Expo& e, const Fe& v) {
        for (size_t i = 0; i < xm.size(); ++i)
            if (xm[i] == e) {
                X.c[i] = X.c[i] + v;
                return;
            }
    };
    const auto& lm = L.monos();
    for (size_t i = 0; i < lm.size(); ++i)
        put(Expo{lm[i][0], lm[i][1], lm[i][2], 2}, L.c[i]);
    const auto& cm = C.monos();
    for (size_t i = 0; i < cm.size(); ++i)
        put(Expo{cm[i][0], cm[i][1], cm[i][2], 0}, C.c[i]);
    return X;
}

// f(x,y,z) + t^3
inline Form cyclic_surface_form(const Form& f) {
    if (f.nvars != 3 || f.deg != 3) fail(Error::Kind::domain, "cyclic surface wants a ternary cubic");
    if (f.F->p == 2 || f.F->p == 3)
        fail(Error::Kind::unsupported, "cyclic surfaces need characteristic away from 2 and 3");
    Form X = Form::zero(*f.F, 4, 3);
    const auto& xm = X.monos();
    const auto& cm = f.monos();
    for (size_t i = 0; i < cm.size(); ++i) {
        Expo e{cm[i][0], cm[i][1], cm[i][2], 0};
        for (size_t j = 0; j < xm.size(); ++j)
            if (xm[j] == e) X.c[j] = f.c[i];
    }
    X.at(Expo{0, 0, 0, 3}) = f.F->one();
    return X;
}

// ---- projective points ----

using ProjPt = std::vector<Fe>; // normalized: first nonzero coordinate is 1

inline ProjPt normalize_point(ProjPt v) {
    for (const Fe& x : v)
        if (!x.is_zero()) {
            Fe s = inv(x);
            for (Fe& y : v) y = s * y;
            return v;
        }
    fail(Error::Kind::domain, "zero vector is not a projective point");
}

inline bool same_point(const ProjPt& a, const ProjPt& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

inline ProjPt frobenius_point(const ProjPt& a, u32 e) {
    ProjPt r = a;
    for (Fe& x : r) x = frobenius(x, e);
    return normalize_point(std::move(r));
}

inline ProjPt embed_point(const ProjPt& a, const Field& K) {
    ProjPt r;
    r.reserve(a.size());
    for (const Fe& x : a) r.push_back(embed_into(x, K));
    return r;
}

// least e with Frobenius^(base_k * e) fixing the point
inline u32 point_degree_over(const ProjPt& a, u32 base_k) {
    ProjPt b = a;
    for (u32 e = 1;; ++e) {
        b = frobenius_point(b, base_k);
        if (same_point(b, a)) return e;
        if (e > 64) fail(Error::Kind::internal, "point degree did not close");
    }
}

// enumerate P^n(F) in chart order: (1:*:...:*), then (0:1:*:...), ...
// within a chart the free coordinates count lexicographically, last
// coordinate fastest. Callback may return false to stop.
inline void enumerate_projective(const Field& F, u32 n, const std::function<bool(const ProjPt&)>& cb) {
    for (u32 chart = 0; chart <= n; ++chart) {
        u32 free_coords = n - chart;
        std::vector<u64> idx(free_coords, 0);
        while (true) {
            ProjPt pt;
            pt.reserve(n + 1);
            for (u32 i = 0; i < chart; ++i) pt.push_back(F.zero());
            pt.push_back(F.one());
            for (u32 i = 0; i < free_coords; ++i) pt.push_back(F.element(idx[i]));
            if (!cb(pt)) return;
            u32 pos = free_coords;
            while (pos > 0) {
                if (++idx[pos - 1] < F.size) break;
                idx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
}

} // namespace zeta27

#endif
