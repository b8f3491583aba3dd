#ifndef ZETA27_WEYL_HPP
#define ZETA27_WEYL_HPP

// The 27-line incidence model of a cubic surface and the symmetry group
// W(E6) acting on it. The group is generated by lattice reflections and
// stored in full (51840 permutations of the line labels); conjugacy
// classes are computed honestly by orbit closure and then matched to the
// 25-row reference table by (order, characteristic polynomial on the
// orthogonal complement of the canonical class).

#include <algorithm>
#include <array>
#include <unordered_map>

#include "field.hpp"

namespace zeta27 {

// ---- line labels ----
// indices 0..5   = E1..E6
// indices 6..20  = Lij with 1 <= i < j <= 6, ordered (1,2),(1,3),...,(5,6)
// indices 21..26 = Q1..Q6
inline constexpr int kNumLines = 27;

inline int line_E(int i) { return i - 1; }
inline int line_Q(int i) { return 20 + i; }
inline int line_L(int i, int j) {
    if (i > j) std::swap(i, j);
    // offset of (i,j), 1-based, in the lex list of pairs
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += 6 - a;
    idx += j - i - 1;
    return 6 + idx;
}

inline std::string line_name(int l) {
    if (l < 6) return "E" + std::to_string(l + 1);
    if (l >= 21) return "Q" + std::to_string(l - 20);
    int idx = l - 6;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 6; ++j)
            if (idx-- == 0) return "L" + std::to_string(i) + std::to_string(j);
    return "?";
}

// ---- Picard lattice ----
// basis (L, E1..E6); pairing diag(+1, -1^6)
using PicVec = std::array<int, 7>;

inline int pic_dot(const PicVec& a, const PicVec& b) {
    int s = a[0] * b[0];
    for (int i = 1; i < 7; ++i) s -= a[i] * b[i];
    return s;
}

inline PicVec pic_K() { return PicVec{-3, 1, 1, 1, 1, 1, 1}; }

inline const std::array<PicVec, 27>& line_vectors() {
    static const std::array<PicVec, 27> v = [] {
        std::array<PicVec, 27> r{};
        for (int i = 1; i <= 6; ++i) {
            PicVec e{};
            e[i] = 1;
            r[line_E(i)] = e;
        }
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                PicVec e{};
                e[0] = 1;
                e[i] = -1;
                e[j] = -1;
                r[line_L(i, j)] = e;
            }
        for (int j = 1; j <= 6; ++j) {
            PicVec e{};
            e[0] = 2;
            for (int i = 1; i <= 6; ++i) e[i] = -1;
            e[j] += 1;
            r[line_Q(j)] = e;
        }
        return r;
    }();
    return v;
}

inline int intersection_number(int a, int b) {
    return pic_dot(line_vectors()[a], line_vectors()[b]);
}

// ---- permutations of the 27 labels ----
using LinePerm = std::array<u8, 27>;

inline LinePerm perm_identity() {
    LinePerm p{};
    for (int i = 0; i < 27; ++i) p[i] = u8(i);
    return p;
}
inline LinePerm perm_compose(const LinePerm& a, const LinePerm& b) {
    LinePerm r{};
    for (int i = 0; i < 27; ++i) r[i] = a[b[i]];
    return r;
}
inline LinePerm perm_inverse(const LinePerm& a) {
    LinePerm r{};
    for (int i = 0; i < 27; ++i) r[a[i]] = u8(i);
    return r;
}
inline u32 perm_order(const LinePerm& a) {
    LinePerm p = a;
    u32 n = 1;
    while (p != perm_identity()) {
        p = perm_compose(a, p);
        ++n;
        if (n > 64) fail(Error::Kind::internal, "permutation order overflow");
    }
    return n;
}

struct PermHash {
    size_t operator()(const LinePerm& p) const {
        u64 h = 1469598103934665603ull;
        for (u8 x : p) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

inline bool perm_preserves_pairing(const LinePerm& g) {
    for (int a = 0; a < 27; ++a)
        for (int b = a; b < 27; ++b)
            if (intersection_number(a, b) != intersection_number(g[a], g[b])) return false;
    return true;
}

// Reflection in a root (self-intersection -2, orthogonal to K):
// v -> v + (v . alpha) alpha, read off on the 27 line classes.
inline LinePerm reflection_perm(const PicVec& alpha) {
    if (pic_dot(alpha, alpha) != -2 || pic_dot(alpha, pic_K()) != 0)
        fail(Error::Kind::domain, "reflection requires a root (D^2 = -2, D.K = 0)");
    const auto& lv = line_vectors();
    LinePerm p{};
    for (int i = 0; i < 27; ++i) {
        PicVec v = lv[i];
        int d = pic_dot(v, alpha);
        for (int j = 0; j < 7; ++j) v[j] += d * alpha[j];
        int image = -1;
        for (int j = 0; j < 27; ++j)
            if (lv[j] == v) { image = j; break; }
        if (image < 0) fail(Error::Kind::internal, "reflection image is not a line class");
        p[i] = u8(image);
    }
    return p;
}

// the S6 subgroup: relabel blowup indices
inline LinePerm s6_perm(const std::array<int, 6>& sigma) {
    LinePerm p{};
    for (int i = 1; i <= 6; ++i) p[line_E(i)] = u8(line_E(sigma[i - 1]));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) p[line_L(i, j)] = u8(line_L(sigma[i - 1], sigma[j - 1]));
    for (int i = 1; i <= 6; ++i) p[line_Q(i)] = u8(line_Q(sigma[i - 1]));
    return p;
}

// 7x7 lattice matrix of a line permutation (columns: images of the basis
// L, E1..E6; the image of L comes from L = L12 + E1 + E2)
using PicMat = std::array<std::array<i64, 7>, 7>;

inline PicMat matrix_of_perm(const LinePerm& g) {
    const auto& lv = line_vectors();
    PicMat M{};
    for (int i = 1; i <= 6; ++i) {
        const PicVec& img = lv[g[line_E(i)]];
        for (int r = 0; r < 7; ++r) M[r][i] = img[r];
    }
    PicVec imgL{};
    const PicVec& a = lv[g[line_L(1, 2)]];
    const PicVec& b = lv[g[line_E(1)]];
    const PicVec& c = lv[g[line_E(2)]];
    for (int r = 0; r < 7; ++r) imgL[r] = a[r] + b[r] + c[r];
    for (int r = 0; r < 7; ++r) M[r][0] = imgL[r];
    return M;
}

inline PicMat mat_mul(const PicMat& A, const PicMat& B) {
    PicMat C{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            i64 a = A[i][k];
            if (!a) continue;
            for (int j = 0; j < 7; ++j) C[i][j] += a * B[k][j];
        }
    return C;
}

inline i64 mat_trace(const PicMat& A) {
    i64 t = 0;
    for (int i = 0; i < 7; ++i) t += A[i][i];
    return t;
}

// characteristic polynomial det(tI - M), exact integer coefficients
// low-to-high, degree 7 (Faddeev-LeVerrier; the divisions are exact)
inline std::array<i64, 8> charpoly7(const PicMat& M) {
    std::array<i64, 8> c{};
    c[7] = 1;
    PicMat A = M;
    i64 ak = -mat_trace(A);
    c[6] = ak;
    for (int k = 2; k <= 7; ++k) {
        PicMat B = A;
        for (int i = 0; i < 7; ++i) B[i][i] += ak;
        A = mat_mul(M, B);
        ak = -mat_trace(A) / k;
        c[7 - k] = ak;
    }
    return c;
}

// rank over the rationals of an integer matrix (fraction-free elimination)
inline int int_matrix_rank(std::array<std::array<i64, 7>, 7> m) {
    int rank = 0;
    for (int col = 0; col < 7 && rank < 7; ++col) {
        int piv = -1;
        for (int r = rank; r < 7; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < 7; ++r) {
            if (m[r][col] == 0) continue;
            i64 a = m[rank][col], b = m[r][col];
            i64 g = std::gcd(std::abs(a), std::abs(b));
            i64 fa = b / g, fb = a / g;
            for (int j = 0; j < 7; ++j) m[r][j] = m[r][j] * fb - m[rank][j] * fa;
        }
        ++rank;
    }
    return rank;
}

// rank of the fixed sublattice of <g> acting on Pic
inline int invariant_rank(const LinePerm& g) {
    PicMat M = matrix_of_perm(g);
    for (int i = 0; i < 7; ++i) M[i][i] -= 1;
    return 7 - int_matrix_rank(M);
}

// ---- the 25-row reference class table ----

struct CycloFactor {
    int m;    // cyclotomic index
    int mult; // multiplicity
};

struct TableRow {
    const char* name;
    const char* carter;
    u32 order;
    std::vector<CycloFactor> factors; // product = charpoly on K^perp
    const char* rep_name;             // Names column (may be empty)
};

inline const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows = {
        {"c1", "0", 1, {{1, 6}}, "id"},
        {"c2", "A1^2", 2, {{2, 2}, {1, 4}}, "(12)(34)"},
        {"c3", "A1^4", 2, {{2, 4}, {1, 2}}, ""},
        {"c4", "D4(a1)", 4, {{4, 2}, {1, 2}}, ""},
        {"c5", "A3xA1", 4, {{4, 1}, {2, 2}, {1, 2}}, "(1234)(56)"},
        {"c6", "A2", 3, {{3, 1}, {1, 4}}, "(123), type II"},
        {"c7", "D4", 6, {{6, 1}, {2, 2}, {1, 2}}, ""},
        {"c8", "A2xA1^2", 6, {{3, 1}, {2, 2}, {1, 2}}, ""},
        {"c9", "A2^2", 3, {{3, 2}, {1, 2}}, "(123)(456), type III"},
        {"c10", "A5xA1", 6, {{6, 1}, {3, 1}, {2, 2}}, ""},
        {"c11", "A2^3", 3, {{3, 3}}, "type I"},
        {"c12", "E6(a2)", 6, {{6, 2}, {3, 1}}, ""},
        {"c13", "E6", 12, {{12, 1}, {3, 1}}, ""},
        {"c14", "E6(a1)", 9, {{9, 1}}, ""},
        {"c15", "A4", 5, {{5, 1}, {1, 2}}, "(12345)"},
        {"c16", "A1", 2, {{2, 1}, {1, 5}}, "(12)"},
        {"c17", "A1^3", 2, {{2, 3}, {1, 3}}, "(12)(34)(56)"},
        {"c18", "A3", 4, {{4, 1}, {2, 1}, {1, 3}}, "(1234)"},
        {"c19", "A3xA1^2", 4, {{4, 1}, {2, 3}, {1, 1}}, ""},
        {"c20", "D5", 8, {{8, 1}, {2, 1}, {1, 1}}, ""},
        {"c21", "A2xA1", 6, {{3, 1}, {2, 1}, {1, 3}}, "(123)(45)"},
        {"c22", "A2^2xA1", 6, {{3, 2}, {2, 1}, {1, 1}}, ""},
        {"c23", "A5", 6, {{6, 1}, {3, 1}, {2, 1}, {1, 1}}, "(123456)"},
        {"c24", "D5(a1)", 12, {{6, 1}, {4, 1}, {2, 1}, {1, 1}}, ""},
        {"c25", "A4xA1", 10, {{5, 1}, {2, 1}, {1, 1}}, ""},
    };
    return rows;
}

inline std::vector<i64> cyclotomic(int m) {
    switch (m) {
        case 1: return {-1, 1};
        case 2: return {1, 1};
        case 3: return {1, 1, 1};
        case 4: return {1, 0, 1};
        case 5: return {1, 1, 1, 1, 1};
        case 6: return {1, -1, 1};
        case 8: return {1, 0, 0, 0, 1};
        case 9: return {1, 0, 0, 1, 0, 0, 1};
        case 12: return {1, 0, -1, 0, 1};
    }
    fail(Error::Kind::internal, "cyclotomic index out of table");
}

inline std::vector<i64> int_poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline std::vector<i64> row_charpoly6(const TableRow& row) {
    std::vector<i64> r{1};
    for (const auto& f : row.factors)
        for (int e = 0; e < f.mult; ++e) r = int_poly_mul(r, cyclotomic(f.m));
    return r;
}

// sum of d-th powers of the primitive m-th roots of unity
inline i64 ramanujan_sum(int m, int d) {
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                r -= r / p;
                while (n % p == 0) n /= p;
            }
        if (n > 1) r -= r / n;
        return r;
    };
    auto mu = [](int n) {
        int r = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                r = -r;
            }
        if (n > 1) r = -r;
        return r;
    };
    int g = std::gcd(m, d);
    int mg = m / g;
    int mom = mu(mg);
    if (mom == 0) return 0;
    return i64(mom) * phi(m) / phi(mg);
}

inline std::string row_eigen_display(const TableRow& row) {
    auto sym = [](int m) -> std::string {
        switch (m) {
            case 1: return "1";
            case 2: return "-1";
            case 3: return "w, w^2";
            case 4: return "i, -i";
            case 5: return "z5, z5^2, z5^3, z5^4";
            case 6: return "-w, -w^2";
            case 8: return "z8, z8^3, z8^5, z8^7";
            case 9: return "z9, z9^2, z9^4, z9^5, z9^7, z9^8";
            case 12: return "iw, iw^2, -iw, -iw^2";
        }
        return "?";
    };
    std::string s;
    for (const auto& f : row.factors)
        for (int e = 0; e < f.mult; ++e) {
            if (!s.empty()) s += ", ";
            s += sym(f.m);
        }
    return s;
}

// ---- the full group with classified elements ----

struct ClassRecord {
    std::string name;     // c1..c25
    std::string carter;
    u32 order = 0;
    u64 class_size = 0;
    std::vector<i64> charpoly6;        // on K^perp
    std::array<i64, 8> charpoly7{};    // on Pic
    std::string eigen_display;
    std::array<i64, 9> trace_tuple{};  // trace of M^d on Pic, d = 1..9
    int inv_rank_cyclic = 0;           // rank of Pic^(<rep>)
    LinePerm representative{};
};

class WeylGroup {
public:
    std::vector<LinePerm> elements;                       // all 51840
    std::unordered_map<LinePerm, u32, PermHash> index_of; // element -> position
    std::vector<u8> class_of_element;                     // -> index into classes
    std::vector<ClassRecord> classes;                     // ordered c1..c25
    LinePerm swap_EQ;                                     // E_i <-> Q_i fixing all L_ij

    static const WeylGroup& get() {
        static WeylGroup W;
        return W;
    }

    const ClassRecord& class_of(const LinePerm& g) const {
        auto it = index_of.find(g);
        if (it == index_of.end()) fail(Error::Kind::domain, "permutation is not in the group");
        return classes[class_of_element[it->second]];
    }

    const ClassRecord& named(const std::string& name) const {
        for (const auto& c : classes)
            if (c.name == name) return c;
        fail(Error::Kind::domain, "unknown class name " + name);
    }

    // type of an order-3 element: "I" (c11), "II" (c6) or "III" (c9)
    std::string order3_type(const LinePerm& g) const {
        const ClassRecord& c = class_of(g);
        if (c.order != 3) fail(Error::Kind::domain, "order3_type wants an element of order 3, got order " + std::to_string(c.order));
        if (c.name == "c11") return "I";
        if (c.name == "c6") return "II";
        return "III";
    }

    std::vector<std::string> minimal_cyclic_classes() const {
        std::vector<std::string> r;
        for (const auto& c : classes)
            if (c.inv_rank_cyclic == 1) r.push_back(c.name);
        return r;
    }

private:
    WeylGroup() {
        generate();
        classify();
        locate_swap_EQ();
    }

    void generate() {
        std::vector<LinePerm> gens;
        for (int i = 1; i <= 5; ++i) {
            PicVec a{};
            a[i] = 1;
            a[i + 1] = -1;
            gens.push_back(reflection_perm(a));
        }
        {
            PicVec a{};
            a[0] = 1;
            a[1] = a[2] = a[3] = -1;
            gens.push_back(reflection_perm(a));
        }
        elements.reserve(51840);
        index_of.reserve(1 << 17);
        LinePerm id = perm_identity();
        elements.push_back(id);
        index_of.emplace(id, 0);
        for (u32 head = 0; head < elements.size(); ++head) {
            LinePerm cur = elements[head];
            for (const LinePerm& g : gens) {
                LinePerm nxt = perm_compose(g, cur);
                if (index_of.emplace(nxt, u32(elements.size())).second) elements.push_back(nxt);
            }
        }
        if (elements.size() != 51840)
            fail(Error::Kind::verification, "group closure has " + std::to_string(elements.size()) + " elements, expected 51840");
        generators_ = gens;
    }

    void classify() {
        class_of_element.assign(elements.size(), 0xff);
        struct RawClass {
            u32 rep;
            u64 size;
        };
        std::vector<RawClass> raw;
        for (u32 i = 0; i < elements.size(); ++i) {
            if (class_of_element[i] != 0xff) continue;
            u8 cid = u8(raw.size());
            // orbit closure under conjugation by the generators
            std::vector<u32> stack{i};
            class_of_element[i] = cid;
            u64 size = 0;
            while (!stack.empty()) {
                u32 e = stack.back();
                stack.pop_back();
                ++size;
                const LinePerm cur = elements[e];
                for (const LinePerm& g : generators_) {
                    LinePerm conj = perm_compose(perm_compose(g, cur), perm_inverse(g));
                    u32 j = index_of.at(conj);
                    if (class_of_element[j] == 0xff) {
                        class_of_element[j] = cid;
                        stack.push_back(j);
                    }
                }
            }
            raw.push_back(RawClass{i, size});
        }
        if (raw.size() != 25)
            fail(Error::Kind::verification, "found " + std::to_string(raw.size()) + " conjugacy classes, expected 25");

        // match each raw class to a table row by (order, charpoly on K^perp)
        const auto& rows = reference_table();
        std::vector<int> raw_to_row(raw.size(), -1);
        std::vector<int> row_used(rows.size(), 0);
        std::vector<ClassRecord> recs(rows.size());
        for (size_t r = 0; r < raw.size(); ++r) {
            const LinePerm& rep = elements[raw[r].rep];
            u32 order = perm_order(rep);
            PicMat M = matrix_of_perm(rep);
            auto cp7 = charpoly7(M);
            // divide by (t - 1); must be exact for a lattice automorphism fixing K
            std::vector<i64> cp6(7, 0);
            {
                i64 carry = 0;
                for (int d = 7; d >= 1; --d) {
                    i64 coef = cp7[d] + carry;
                    cp6[d - 1] = coef;
                    carry = coef;
                }
                if (cp7[0] + carry != 0) fail(Error::Kind::verification, "charpoly not divisible by t - 1");
            }
            int match = -1;
            for (size_t w = 0; w < rows.size(); ++w) {
                if (rows[w].order != order) continue;
                if (row_charpoly6(rows[w]) != cp6) continue;
                if (match >= 0) fail(Error::Kind::verification, "(order, charpoly) matches two table rows");
                match = int(w);
            }
            if (match < 0) fail(Error::Kind::verification, "class of order " + std::to_string(order) + " matches no table row");
            if (row_used[match]++) fail(Error::Kind::verification, "two classes match table row " + std::string(rows[match].name));
            raw_to_row[r] = match;

            ClassRecord rec;
            rec.name = rows[match].name;
            rec.carter = rows[match].carter;
            rec.order = order;
            rec.class_size = raw[r].size;
            rec.charpoly6 = cp6;
            rec.charpoly7 = cp7;
            rec.eigen_display = row_eigen_display(rows[match]);
            rec.representative = rep;
            rec.inv_rank_cyclic = invariant_rank(rep);
            PicMat P = M;
            for (int d = 1; d <= 9; ++d) {
                rec.trace_tuple[d - 1] = mat_trace(P);
                P = mat_mul(P, M);
            }
            recs[match] = std::move(rec);
        }
        // reindex class_of_element so that it points into the c1..c25 order
        std::vector<u8> remap(raw.size());
        for (size_t r = 0; r < raw.size(); ++r) remap[r] = u8(raw_to_row[r]);
        for (auto& c : class_of_element) c = remap[c];
        classes = std::move(recs);

        u64 total = 0;
        for (const auto& c : classes) total += c.class_size;
        if (total != 51840) fail(Error::Kind::verification, "class sizes do not sum to the group order");
    }

    void locate_swap_EQ() {
        int found = 0;
        for (const LinePerm& g : elements) {
            bool ok = true;
            for (int i = 1; i <= 6 && ok; ++i)
                ok = g[line_E(i)] == line_Q(i) && g[line_Q(i)] == line_E(i);
            for (int i = 1; i <= 6 && ok; ++i)
                for (int j = i + 1; j <= 6 && ok; ++j) ok = g[line_L(i, j)] == line_L(i, j);
            if (ok) {
                swap_EQ = g;
                ++found;
            }
        }
        if (found != 1)
            fail(Error::Kind::verification, "expected a unique element swapping E_i and Q_i, found " + std::to_string(found));
    }

    std::vector<LinePerm> generators_;
};

// ---- structural verification report ----

struct LemmaReport {
    bool passed = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        passed = passed && ok;
    }
};

// Exhaustive checks over cyclic subgroups (via class representatives):
// (i) order divisible by 5 forces invariant rank > 1;
// (ii) 2-power order forces invariant rank > 1;
// (iii) there is exactly one class of order-9 elements and its cube has
//       invariant rank 1 on the orthogonal complement (type I);
// (iv) no element has order 18, 27 or 36;
// (v) among involutions, exactly one class has invariant Picard rank 3.
inline LemmaReport verify_structure_lemmas() {
    const WeylGroup& W = WeylGroup::get();
    LemmaReport rep;

    for (const auto& c : W.classes)
        if (c.order % 5 == 0)
            rep.check(c.inv_rank_cyclic > 1, "(i) class " + c.name + " (order divisible by 5) has invariant rank " +
                                                 std::to_string(c.inv_rank_cyclic) + " > 1");
    {
        const LinePerm five = s6_perm({2, 3, 4, 5, 1, 6}); // (12345)
        bool inv_pair = five[line_E(6)] == line_E(6) && five[line_Q(6)] == line_Q(6);
        rep.check(inv_pair && intersection_number(line_E(6), line_Q(6)) == 0,
                  "(i) witness: (12345) fixes the disjoint pair E6, Q6");
    }
    for (const auto& c : W.classes) {
        u32 o = c.order;
        while (o % 2 == 0) o /= 2;
        if (o == 1)
            rep.check(c.inv_rank_cyclic > 1, "(ii) class " + c.name + " (2-power order) has invariant rank " +
                                                 std::to_string(c.inv_rank_cyclic) + " > 1");
    }
    {
        int order9 = 0;
        std::string cube_class;
        for (const auto& c : W.classes)
            if (c.order == 9) {
                ++order9;
                LinePerm cube = perm_compose(c.representative, perm_compose(c.representative, c.representative));
                cube_class = W.class_of(cube).name;
            }
        rep.check(order9 == 1, "(iii) exactly one class of order-9 elements");
        rep.check(cube_class == "c11", "(iii) the cube of an order-9 element has type I (got " + cube_class + ")");
    }
    {
        bool ok = true;
        for (const auto& c : W.classes)
            ok = ok && (c.order != 18 && c.order != 27 && c.order != 36);
        rep.check(ok, "(iv) no cyclic subgroup of order 18, 27 or 36");
    }
    {
        int rank3 = 0;
        std::string who;
        for (const auto& c : W.classes)
            if (c.order == 2 && c.inv_rank_cyclic == 3) {
                ++rank3;
                who = c.name;
            }
        rep.check(rank3 == 1 && who == "c3", "(v) the unique involution class with invariant rank 3 is c3");
    }
    return rep;
}

} // namespace zeta27

#endif
