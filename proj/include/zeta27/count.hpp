#ifndef ZETA27_COUNT_HPP
#define ZETA27_COUNT_HPP

// Exact point counts of cubic surfaces over extension fields. The fibered
// counter walks P^2 once and answers each fiber with the O(1) root census,
// so counting |X(F_{q^d})| costs about Q^2 table operations (Q = q^d). The
// naive P^3 enumeration stays around as an independent oracle for tests.
//
// Smoothness certification scans for singular closed points of degree
// <= 4: a singular cubic surface always has one (a normal cubic has at
// most four singular points, and a non-normal one is singular along a line
// or conic, which carries points of degree <= 2).

#include <thread>

#include "fieldtable.hpp"
#include "forms.hpp"

namespace zeta27 {

struct CountBudget {
    u64 max_fiber_steps = 20'000'000'000ull;
};

namespace detail {

// per-fiber evaluator: coefficients of the residual polynomial in t
struct TSlices {
    // slices[j] = logrep coefficients of t^j, aligned with monomials(3, 3-j)
    std::array<std::vector<u32>, 4> slices;

    TSlices(const Form& X, const FieldTable& T) {
        for (u32 j = 0; j <= 3; ++j) {
            Form s = X.slice(3, j);
            slices[j].resize(s.c.size());
            for (size_t i = 0; i < s.c.size(); ++i) slices[j][i] = T.from_fe(s.c[i]);
        }
    }
};

// evaluate a ternary logrep form of degree d at (x, y, z) logreps
inline u32 eval_slice(const std::vector<u32>& coeffs, u32 d, const FieldTable& T, u32 x, u32 y, u32 z) {
    const auto& ms = monomials(3, d);
    u32 acc = FieldTable::ZERO;
    for (size_t i = 0; i < ms.size(); ++i) {
        u32 c = coeffs[i];
        if (c == FieldTable::ZERO) continue;
        u32 term = c;
        for (u8 e = 0; e < ms[i][0]; ++e) term = T.mul(term, x);
        for (u8 e = 0; e < ms[i][1]; ++e) term = T.mul(term, y);
        for (u8 e = 0; e < ms[i][2]; ++e) term = T.mul(term, z);
        acc = T.add(acc, term);
    }
    return acc;
}

} // namespace detail

inline u64 fiber_steps_for(u64 Q, u32 extra_depth = 0) {
    (void)extra_depth;
    return Q * Q + Q + 1;
}

// |X(F_{q^d})| by fibering over P^2 and counting roots of the residual
// cubic in t. Exact; deterministic; optionally split across threads with a
// bit-identical merge.
inline i64 count_points(const Form& X, u32 d, const CountBudget& budget = {}, u32 threads = 2) {
    if (X.nvars != 4 || X.deg != 3) fail(Error::Kind::domain, "count_points wants a quaternary cubic");
    if (X.is_zero()) fail(Error::Kind::domain, "count_points: zero form");
    if (d < 1) fail(Error::Kind::domain, "count_points: depth must be >= 1");
    const Field& base = *X.F;
    const Field& K = Field::get(base.p, base.k * d);
    u64 steps = fiber_steps_for(K.size);
    if (steps > budget.max_fiber_steps)
        fail(Error::Kind::budget, "counting over a field of size " + std::to_string(K.size) + " needs " +
                                      std::to_string(steps) + " fiber steps, over the budget of " +
                                      std::to_string(budget.max_fiber_steps));
    const FieldTable& T = FieldTable::get(K);
    Form XK = X.mapped(K);
    detail::TSlices S(XK, T);
    const u64 Q = K.size;
    const u32 Z = FieldTable::ZERO;

    // big chart x = 1: iterate y rows, Horner in z inside
    auto row_sum = [&](u64 ybegin, u64 yend) -> i64 {
        i64 total = 0;
        const auto& m3 = monomials(3, 3);
        const auto& m2 = monomials(3, 2);
        const auto& m1 = monomials(3, 1);
        for (u64 yi = ybegin; yi < yend; ++yi) {
            u32 y = T.from_index(yi);
            // z-coefficients of each slice at x = 1, this y
            u32 w0[4] = {Z, Z, Z, Z}; // t^0 slice: cubic in z
            u32 w1[3] = {Z, Z, Z};    // t^1 slice: quadratic in z
            u32 w2[2] = {Z, Z};       // t^2 slice: linear in z
            u32 w3 = S.slices[3].empty() ? Z : S.slices[3][0];
            for (size_t i = 0; i < m3.size(); ++i) {
                u32 c = S.slices[0][i];
                if (c == Z) continue;
                u32 term = c;
                for (u8 e = 0; e < m3[i][1]; ++e) term = T.mul(term, y);
                w0[m3[i][2]] = T.add(w0[m3[i][2]], term);
            }
            for (size_t i = 0; i < m2.size(); ++i) {
                u32 c = S.slices[1][i];
                if (c == Z) continue;
                u32 term = c;
                for (u8 e = 0; e < m2[i][1]; ++e) term = T.mul(term, y);
                w1[m2[i][2]] = T.add(w1[m2[i][2]], term);
            }
            for (size_t i = 0; i < m1.size(); ++i) {
                u32 c = S.slices[2][i];
                if (c == Z) continue;
                u32 term = c;
                for (u8 e = 0; e < m1[i][1]; ++e) term = T.mul(term, y);
                w2[m1[i][2]] = T.add(w2[m1[i][2]], term);
            }
            for (u64 zi = 0; zi < Q; ++zi) {
                u32 z = T.from_index(zi);
                u32 c0 = T.add(T.mul(T.add(T.mul(T.add(T.mul(w0[3], z), w0[2]), z), w0[1]), z), w0[0]);
                u32 c1 = T.add(T.mul(T.add(T.mul(w1[2], z), w1[1]), z), w1[0]);
                u32 c2 = T.add(T.mul(w2[1], z), w2[0]);
                total += i64(T.cubic_census(w3, c2, c1, c0));
            }
        }
        return total;
    };

    i64 total = 0;
    if (threads > 1 && Q >= 4096) {
        u64 mid = Q / 2;
        i64 a = 0, b = 0;
        std::thread th([&] { a = row_sum(0, mid); });
        b = row_sum(mid, Q);
        th.join();
        total = a + b;
    } else {
        total = row_sum(0, Q);
    }

    // chart x = 0, y = 1: evaluate slices at (0, 1, z)
    for (u64 zi = 0; zi < Q; ++zi) {
        u32 z = T.from_index(zi);
        u32 c0 = detail::eval_slice(S.slices[0], 3, T, Z, T.one(), z);
        u32 c1 = detail::eval_slice(S.slices[1], 2, T, Z, T.one(), z);
        u32 c2 = detail::eval_slice(S.slices[2], 1, T, Z, T.one(), z);
        u32 c3 = S.slices[3].empty() ? Z : S.slices[3][0];
        total += i64(T.cubic_census(c3, c2, c1, c0));
    }
    // chart x = y = 0, z = 1
    {
        u32 c0 = detail::eval_slice(S.slices[0], 3, T, Z, Z, T.one());
        u32 c1 = detail::eval_slice(S.slices[1], 2, T, Z, Z, T.one());
        u32 c2 = detail::eval_slice(S.slices[2], 1, T, Z, Z, T.one());
        u32 c3 = S.slices[3].empty() ? Z : S.slices[3][0];
        total += i64(T.cubic_census(c3, c2, c1, c0));
    }
    // apex (0:0:0:1): on X exactly when the t^3 coefficient vanishes
    if (XK.at(Expo{0, 0, 0, 3}).is_zero()) total += 1;
    return total;
}

// direct P^3 enumeration; the independent oracle
inline i64 count_points_naive(const Form& X, u32 d, const CountBudget& budget = {}) {
    const Field& base = *X.F;
    const Field& K = Field::get(base.p, base.k * d);
    u64 pts = ((K.size * K.size + K.size + 1) * K.size) + 1;
    if (pts > budget.max_fiber_steps)
        fail(Error::Kind::budget, "naive enumeration of P^3 over field of size " + std::to_string(K.size) +
                                      " needs " + std::to_string(pts) + " evaluations");
    const FieldTable& T = FieldTable::get(K);
    Form XK = X.mapped(K);
    std::vector<u32> lc(XK.c.size());
    for (size_t i = 0; i < XK.c.size(); ++i) lc[i] = T.from_fe(XK.c[i]);
    const auto& ms = XK.monos();
    i64 total = 0;
    const u32 Z = FieldTable::ZERO;
    for (u32 chart = 0; chart < 4; ++chart) {
        u32 freec = 3 - chart;
        std::vector<u64> idx(freec, 0);
        while (true) {
            u32 pt[4];
            for (u32 i = 0; i < chart; ++i) pt[i] = Z;
            pt[chart] = T.one();
            for (u32 i = 0; i < freec; ++i) pt[chart + 1 + i] = T.from_index(idx[i]);
            u32 acc = Z;
            for (size_t i = 0; i < ms.size(); ++i) {
                if (lc[i] == Z) continue;
                u32 term = lc[i];
                for (u32 v = 0; v < 4; ++v)
                    for (u8 e = 0; e < ms[i][v]; ++e) term = T.mul(term, pt[v]);
                acc = T.add(acc, term);
            }
            if (acc == Z) ++total;
            u32 pos = freec;
            while (pos > 0) {
                if (++idx[pos - 1] < K.size) break;
                idx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return total;
}

struct SingularPoint {
    ProjPt pt;  // coordinates over F_{q^degree}
    u32 degree; // minimal field degree over the base
};

// All common zeros of X and its four partials over F_{q^e}, e = 1..d_max,
// each reported once at its minimal degree. Empty output at d_max >= 4 is
// the smoothness certificate. stop_at_first makes certification fail fast.
inline std::vector<SingularPoint> singular_points(const Form& X, u32 d_max = 4, bool stop_at_first = false) {
    if (X.nvars != 4 || X.deg != 3) fail(Error::Kind::domain, "singular_points wants a quaternary cubic");
    if (X.is_zero()) fail(Error::Kind::domain, "singular_points: zero form");
    const Field& base = *X.F;
    std::vector<SingularPoint> out;
    std::array<Form, 5> polys = {X, X.derivative(0), X.derivative(1), X.derivative(2), X.derivative(3)};
    for (u32 d = 1; d <= d_max; ++d) {
        const Field& K = Field::get(base.p, base.k * d);
        const FieldTable& T = FieldTable::get(K);
        const u32 Z = FieldTable::ZERO;
        // t-degree profile per poly: X has degree <= 3, partials <= 2
        struct PolySlices {
            std::array<std::vector<u32>, 4> s;
            u32 tdeg;
        };
        std::array<PolySlices, 5> ps;
        for (u32 i = 0; i < 5; ++i) {
            const Form& P = polys[i];
            u32 td = P.deg; // max possible exponent of t
            for (u32 j = 0; j <= td; ++j) {
                Form sl = P.slice(3, j);
                ps[i].s[j].resize(sl.c.size());
                for (size_t m = 0; m < sl.c.size(); ++m) ps[i].s[j][m] = T.from_fe(sl.c[m]);
            }
            ps[i].tdeg = td;
        }
        auto record = [&](ProjPt p) {
            p = normalize_point(std::move(p));
            u32 deg = point_degree_over(p, base.k);
            if (deg != d) return; // found earlier at its own depth
            for (const auto& s : out)
                if (s.degree == d && same_point(embed_point(s.pt, *p[0].F), p)) return;
            out.push_back(SingularPoint{p, d});
        };
        auto fe_of = [&](u32 l) { return T.to_fe(l); };
        // walk P^2 fibers
        bool done = false;
        auto handle_fiber = [&](u32 x, u32 y, u32 z) {
            // evaluate the five t-polynomials
            u32 coef[5][4];
            for (u32 i = 0; i < 5; ++i)
                for (u32 j = 0; j <= 3; ++j) coef[i][j] = Z;
            for (u32 i = 0; i < 5; ++i)
                for (u32 j = 0; j <= ps[i].tdeg; ++j)
                    coef[i][j] = detail::eval_slice(ps[i].s[j], ps[i].tdeg - j, T, x, y, z);
            auto tdeg_of = [&](u32 i) {
                for (int j = 3; j >= 0; --j)
                    if (coef[i][j] != Z) return j;
                return -1;
            };
            // candidates from a partial of smallest positive degree
            int pick = -1, pickdeg = 4;
            for (u32 i = 1; i < 5; ++i) {
                int td = tdeg_of(i);
                if (td >= 1 && td < pickdeg) { pick = int(i); pickdeg = td; }
            }
            std::vector<u32> cand;
            if (pick < 0) {
                // all partials constant in t
                bool all_zero = true;
                for (u32 i = 1; i < 5; ++i)
                    if (coef[i][0] != Z) all_zero = false;
                if (!all_zero) return;
                // gradient vanishes along the fiber; X's roots are singular
                int fd = tdeg_of(0);
                if (fd <= 0) {
                    if (fd < 0) {
                        // the whole fiber lies in the singular locus
                        record(ProjPt{fe_of(x), fe_of(y), fe_of(z), T.F->zero()});
                    }
                    return;
                }
                for (u64 ti = 0; ti < K.size; ++ti) {
                    u32 t = T.from_index(ti);
                    u32 v = coef[0][0];
                    u32 tp = T.one();
                    for (int j = 1; j <= fd; ++j) {
                        tp = T.mul(tp, t);
                        v = T.add(v, T.mul(coef[0][j], tp));
                    }
                    if (v == Z) cand.push_back(t);
                }
            } else if (pickdeg == 1) {
                cand.push_back(T.divl(T.neg(coef[pick][0]), coef[pick][1]));
            } else {
                u32 roots[2];
                int n = T.quad_solve(coef[pick][2], coef[pick][1], coef[pick][0], roots);
                for (int i = 0; i < n; ++i) cand.push_back(roots[i]);
            }
            for (u32 t : cand) {
                bool ok = true;
                for (u32 i = 0; i < 5 && ok; ++i) {
                    u32 v = coef[i][0];
                    u32 tp = T.one();
                    for (u32 j = 1; j <= 3; ++j) {
                        tp = T.mul(tp, t);
                        v = T.add(v, T.mul(coef[i][j], tp));
                    }
                    ok = (v == Z);
                }
                if (ok) record(ProjPt{fe_of(x), fe_of(y), fe_of(z), fe_of(t)});
            }
        };
        for (u64 yi = 0; yi < K.size && !done; ++yi)
            for (u64 zi = 0; zi < K.size; ++zi) {
                handle_fiber(T.one(), T.from_index(yi), T.from_index(zi));
                if (stop_at_first && !out.empty()) { done = true; break; }
            }
        for (u64 zi = 0; zi < K.size && !done; ++zi) {
            handle_fiber(Z, T.one(), T.from_index(zi));
            if (stop_at_first && !out.empty()) done = true;
        }
        if (!done) handle_fiber(Z, Z, T.one());
        // apex
        {
            Fe f_t3 = X.at(Expo{0, 0, 0, 3});
            Fe gx = X.at(Expo{1, 0, 0, 2});
            Fe gy = X.at(Expo{0, 1, 0, 2});
            Fe gz = X.at(Expo{0, 0, 1, 2});
            Fe gt = base.from_int(3) * f_t3;
            if (d == 1 && f_t3.is_zero() && gx.is_zero() && gy.is_zero() && gz.is_zero() && gt.is_zero())
                out.push_back(SingularPoint{ProjPt{base.zero(), base.zero(), base.zero(), base.one()}, 1});
        }
        if (stop_at_first && !out.empty()) return out;
    }
    return out;
}

inline bool is_smooth_surface(const Form& X, u32 d_max = 4) {
    return singular_points(X, d_max, true).empty();
}

// Reduced check: a cubic form is non-reduced exactly when the square of a
// rational linear form divides it. L^2 | F is tested in coordinates where
// L becomes the first variable.
inline bool is_reduced_cubic(const Form& X) {
    const Field& F = *X.F;
    u32 n = X.nvars;
    std::vector<u64> idx(n, 0);
    // enumerate normalized linear forms (first nonzero coefficient = 1)
    for (u32 lead = 0; lead < n; ++lead) {
        u32 freec = n - lead - 1;
        std::vector<u64> id(freec, 0);
        while (true) {
            std::vector<Fe> L(n, F.zero());
            L[lead] = F.one();
            for (u32 i = 0; i < freec; ++i) L[lead + 1 + i] = F.element(id[i]);
            // change of coordinates: y_lead = L, y_j = x_j otherwise; invert
            // x_lead = y_lead - sum_{j != lead} L_j y_j
            std::vector<std::vector<Fe>> M(n, std::vector<Fe>(n, F.zero()));
            for (u32 v = 0; v < n; ++v) {
                if (v == lead) {
                    M[v][lead] = F.one();
                    for (u32 j = 0; j < n; ++j)
                        if (j != lead) M[v][j] = -L[j];
                } else {
                    M[v][v] = F.one();
                }
            }
            Form Y = X.subst_linear(M, n);
            bool divisible = true;
            const auto& ms = Y.monos();
            for (size_t i = 0; i < ms.size() && divisible; ++i)
                if (!Y.c[i].is_zero() && ms[i][lead] < 2) divisible = false;
            if (divisible) return false;
            u32 pos = freec;
            while (pos > 0) {
                if (++id[pos - 1] < F.size) break;
                id[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    (void)idx;
    return true;
}

} // namespace zeta27

#endif
