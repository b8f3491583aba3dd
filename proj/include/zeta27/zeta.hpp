#ifndef ZETA27_ZETA_HPP
#define ZETA27_ZETA_HPP

// From exact point counts to the conjugacy class of Frobenius and back.
// Over F_{q^d} a smooth cubic surface has N_d = 1 + q^d t_d + q^{2d} where
// t_d is the trace of Frobenius^d on the Picard lattice, so counts and
// trace vectors carry the same information. The 25 candidate trace tuples
// come from integer powers of the class representatives; no floating point
// is involved anywhere.

#include "count.hpp"
#include "weyl.hpp"

namespace zeta27 {

struct CountProfile {
    i64 q = 0;
    std::vector<i64> N; // N[d-1] = |X(F_{q^d})|
};

struct TraceVector {
    i64 q = 0;
    std::vector<i64> t; // t[d-1] = trace of Fr^d on Pic
};

inline i64 ipow_checked(i64 b, u32 e) {
    i64 r = 1;
    for (u32 i = 0; i < e; ++i) {
        if (r > (i64(1) << 62) / b) fail(Error::Kind::unsupported, "power overflows 63 bits");
        r *= b;
    }
    return r;
}

// attained trace range over the whole class table, depths 1..9
inline std::pair<i64, i64> trace_range() {
    static const std::pair<i64, i64> r = [] {
        const WeylGroup& W = WeylGroup::get();
        i64 lo = 100, hi = -100;
        for (const auto& c : W.classes)
            for (int d = 0; d < 9; ++d) {
                lo = std::min(lo, c.trace_tuple[d]);
                hi = std::max(hi, c.trace_tuple[d]);
            }
        return std::make_pair(lo, hi);
    }();
    return r;
}

inline TraceVector traces_from_counts(const CountProfile& counts) {
    TraceVector tv;
    tv.q = counts.q;
    auto [lo, hi] = trace_range();
    for (size_t i = 0; i < counts.N.size(); ++i) {
        u32 d = u32(i + 1);
        i64 qd = ipow_checked(counts.q, d);
        i64 num = counts.N[i] - 1 - qd * qd;
        if (num % qd != 0)
            fail(Error::Kind::verification, "N_" + std::to_string(d) + " = " + std::to_string(counts.N[i]) +
                                                " gives a non-integral trace; not a smooth cubic surface");
        i64 t = num / qd;
        if (t < lo || t > hi)
            fail(Error::Kind::verification, "trace t_" + std::to_string(d) + " = " + std::to_string(t) +
                                                " is outside the attainable range [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "]");
        tv.t.push_back(t);
    }
    return tv;
}

inline CountProfile predicted_counts(const std::string& class_name, i64 q, u32 depth) {
    const WeylGroup& W = WeylGroup::get();
    const ClassRecord& c = W.named(class_name);
    CountProfile r;
    r.q = q;
    PicMat M = matrix_of_perm(c.representative);
    PicMat P = M;
    for (u32 d = 1; d <= depth; ++d) {
        i64 qd = ipow_checked(q, d);
        r.N.push_back(1 + qd * qd + qd * mat_trace(P));
        P = mat_mul(P, M);
    }
    return r;
}

// least depth at which the 25 trace tuples are pairwise distinct
inline u32 distinguishing_depth() {
    static const u32 D = [] {
        const WeylGroup& W = WeylGroup::get();
        for (u32 d = 1; d <= 9; ++d) {
            bool distinct = true;
            for (size_t i = 0; i < W.classes.size() && distinct; ++i)
                for (size_t j = i + 1; j < W.classes.size() && distinct; ++j) {
                    bool same = true;
                    for (u32 e = 0; e < d && same; ++e)
                        same = W.classes[i].trace_tuple[e] == W.classes[j].trace_tuple[e];
                    if (same) distinct = false;
                }
            if (distinct) return d;
        }
        fail(Error::Kind::internal, "trace tuples do not separate the classes by depth 9");
    }();
    return D;
}

// classes whose trace tuple starts with the observed prefix
inline std::vector<std::string> identify_class(const TraceVector& tv) {
    if (tv.t.empty()) fail(Error::Kind::domain, "identify_class: empty trace vector");
    const WeylGroup& W = WeylGroup::get();
    std::vector<std::string> out;
    for (const auto& c : W.classes) {
        PicMat M = matrix_of_perm(c.representative);
        PicMat P = M;
        bool match = true;
        for (size_t i = 0; i < tv.t.size() && match; ++i) {
            match = mat_trace(P) == tv.t[i];
            P = mat_mul(P, M);
        }
        if (match) out.push_back(c.name);
    }
    if (out.empty())
        fail(Error::Kind::verification, "trace vector matches no conjugacy class; the counts are not those of a smooth cubic surface");
    return out;
}

inline bool is_minimal_class(const std::string& name) {
    return name == "c10" || name == "c11" || name == "c12" || name == "c13" || name == "c14";
}

// ---- the zeta numerator ----

struct PofT {
    std::string factored;    // symbolic in q, e.g. (1-qt)(1+qt+q^2t^2)^3
    std::vector<i64> coeffs; // numeric coefficients of det(1 - qtM), low to high
};

inline std::string cyclo_reversed_factor(int m) {
    switch (m) {
        case 1: return "(1-qt)";
        case 2: return "(1+qt)";
        case 3: return "(1+qt+q^2t^2)";
        case 6: return "(1-qt+q^2t^2)";
        case 4: return "(1+q^2t^2)";
        case 5: return "(1+qt+q^2t^2+q^3t^3+q^4t^4)";
        case 8: return "(1+q^4t^4)";
        case 9: return "(1+q^3t^3+q^6t^6)";
        case 12: return "(1-q^2t^2+q^4t^4)";
    }
    fail(Error::Kind::internal, "factor index out of table");
}

inline PofT p_of_t(const std::string& class_name, i64 q) {
    const WeylGroup& W = WeylGroup::get();
    const ClassRecord& c = W.named(class_name);
    PofT r;
    // coefficients: det(1 - qtM) = sum_j chi_{7-j} (qt)^j for monic chi
    for (int j = 0; j <= 7; ++j) r.coeffs.push_back(c.charpoly7[7 - j] * ipow_checked(q, u32(j)));
    // factored display: one (1-qt) from the canonical class plus the row factors
    const TableRow* row = nullptr;
    for (const auto& rw : reference_table())
        if (rw.name == class_name) row = &rw;
    std::map<int, int> mult;
    mult[1] += 1;
    for (const auto& f : row->factors) mult[f.m] += f.mult;
    const int display_rank[13] = {0, 0, 1, 2, 4, 5, 3, 0, 6, 7, 0, 0, 8};
    std::vector<int> ms;
    for (auto& [m, k] : mult) ms.push_back(m);
    std::sort(ms.begin(), ms.end(), [&](int a, int b) { return display_rank[a] < display_rank[b]; });
    for (int m : ms) {
        r.factored += cyclo_reversed_factor(m);
        if (mult[m] > 1) r.factored += "^" + std::to_string(mult[m]);
    }
    return r;
}

// ---- orchestration: classify an explicit surface ----

struct ClassifyReport {
    i64 q = 0;
    bool unique = false;
    std::string cls;
    bool minimal = false;
    std::vector<std::string> candidates;
    std::vector<i64> counts;
    std::vector<i64> traces;
    u32 depth_used = 0;
    PofT numerator;
};

// Counts to the least depth that pins a unique class (never beyond the
// distinguishing depth). Smoothness is certified first; budget exhaustion
// returns the surviving candidate set instead of an answer.
inline ClassifyReport classify_surface(const Form& X, const CountBudget& budget = {}) {
    if (!is_reduced_cubic(X))
        fail(Error::Kind::domain, "the form is not reduced (a repeated linear factor); not a cubic surface");
    {
        auto sing = singular_points(X, 4, true);
        if (!sing.empty())
            fail(Error::Kind::domain, "the surface is singular (witness of degree " + std::to_string(sing[0].degree) + ")");
    }
    ClassifyReport rep;
    rep.q = i64(X.F->size);
    CountProfile prof;
    prof.q = rep.q;
    u32 dmax = distinguishing_depth();
    for (u32 d = 1; d <= dmax; ++d) {
        i64 n;
        try {
            n = count_points(X, d, budget);
        } catch (const Error& e) {
            if (e.kind != Error::Kind::budget) throw;
            break; // report what we have
        }
        prof.N.push_back(n);
        TraceVector tv = traces_from_counts(prof);
        rep.counts = prof.N;
        rep.traces = tv.t;
        rep.depth_used = d;
        rep.candidates = identify_class(tv);
        if (rep.candidates.size() == 1) {
            rep.unique = true;
            rep.cls = rep.candidates[0];
            rep.minimal = is_minimal_class(rep.cls);
            rep.numerator = p_of_t(rep.cls, rep.q);
            return rep;
        }
    }
    return rep;
}

} // namespace zeta27

#endif
