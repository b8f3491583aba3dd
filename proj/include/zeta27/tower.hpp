#ifndef ZETA27_TOWER_HPP
#define ZETA27_TOWER_HPP

// Embeddings between extensions of the same prime field. An embedding
// F_{p^a} -> F_{p^b} (a | b) sends the source generator to the smallest
// root of the source modulus in the destination, which makes every map
// deterministic and reproducible. Instances are cached per (p, a, b).

#include "poly.hpp"

namespace zeta27 {

class Embedding {
public:
    const Field* src;
    const Field* dst;
    Fe gen_image;

    static const Embedding& get(const Field& src, const Field& dst) {
        if (src.p != dst.p) fail(Error::Kind::domain, "embedding requires equal characteristic");
        if (dst.k % src.k != 0) fail(Error::Kind::domain, "no embedding: source degree does not divide destination degree");
        static std::mutex mu;
        static std::map<std::tuple<u32, u32, u32>, std::unique_ptr<Embedding>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(src.p, src.k, dst.k);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<Embedding>(new Embedding(src, dst))).first;
        return *it->second;
    }

    Fe map(const Fe& a) const {
        if (a.F != src) fail(Error::Kind::domain, "embed: element not in source field");
        Fe r = dst->zero();
        for (u32 i = src->k; i-- > 0;) r = r * gen_image + dst->from_int(i64(a.c[i]));
        return r;
    }

    // Preimage when b lies in the image subfield; membership is the
    // Frobenius fixed-point test b^(p^a) = b.
    std::optional<Fe> descend(const Fe& b) const {
        if (b.F != dst) fail(Error::Kind::domain, "descend: element not in destination field");
        if (!(frobenius(b, src->k) == b)) return std::nullopt;
        // solve basis_matrix * x = coords(b) over F_p
        u32 p = src->p, rows = dst->k, cols = src->k;
        std::vector<std::vector<u32>> m(rows, std::vector<u32>(cols + 1, 0));
        for (u32 j = 0; j < cols; ++j)
            for (u32 i = 0; i < rows; ++i) m[i][j] = basis_[j].c[i];
        for (u32 i = 0; i < rows; ++i) m[i][cols] = b.c[i];
        u32 rank = 0;
        std::vector<int> pivot_col(rows, -1);
        for (u32 col = 0; col < cols && rank < rows; ++col) {
            u32 sel = rank;
            while (sel < rows && m[sel][col] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(m[sel], m[rank]);
            u32 inv = detail::modinv_u32(m[rank][col], p);
            for (u32 j = col; j <= cols; ++j) m[rank][j] = u32(u64(m[rank][j]) * inv % p);
            for (u32 i = 0; i < rows; ++i) {
                if (i == rank || m[i][col] == 0) continue;
                u32 f = m[i][col];
                for (u32 j = col; j <= cols; ++j)
                    m[i][j] = u32((m[i][j] + u64(p) - u64(f) * m[rank][j] % p) % p);
            }
            pivot_col[rank] = int(col);
            ++rank;
        }
        for (u32 i = rank; i < rows; ++i)
            if (m[i][cols] != 0) return std::nullopt; // inconsistent: not in subfield
        std::vector<u32> x(cols, 0);
        for (u32 i = 0; i < rank; ++i) x[u32(pivot_col[i])] = m[i][cols];
        return src->from_coeffs(std::move(x));
    }

private:
    std::vector<Fe> basis_; // images of 1, g, g^2, ... in the destination

    Embedding(const Field& s, const Field& d) : src(&s), dst(&d) {
        if (src->k == 1) {
            gen_image = dst->one();
        } else {
            std::vector<Fe> mc;
            mc.reserve(src->modulus.size());
            for (u32 x : src->modulus) mc.push_back(dst->from_int(i64(x)));
            auto roots = find_roots(UniPoly::from(*dst, std::move(mc)));
            if (roots.empty()) fail(Error::Kind::internal, "source modulus has no root in destination");
            gen_image = roots.front(); // smallest in element order
        }
        Fe acc = dst->one();
        for (u32 i = 0; i < src->k; ++i) {
            basis_.push_back(acc);
            acc = acc * gen_image;
        }
    }
};

inline Fe embed_into(const Fe& a, const Field& dst) {
    if (a.F == &dst) return a;
    return Embedding::get(*a.F, dst).map(a);
}

inline std::optional<Fe> descend_to(const Fe& b, const Field& sub) {
    if (b.F == &sub) return b;
    return Embedding::get(sub, *b.F).descend(b);
}

// Least e >= 1 with a^(q^e) = a, where q = p^base_k: the degree of a over
// F_q inside its ambient field.
inline u32 degree_over(const Fe& a, u32 base_k) {
    const Field& F = *a.F;
    if (F.k % base_k != 0) fail(Error::Kind::domain, "degree_over: base does not sit under ambient field");
    Fe b = a;
    for (u32 e = 1;; ++e) {
        b = frobenius(b, base_k);
        if (b == a) return e;
        if (e > F.k) fail(Error::Kind::internal, "degree_over failed to close");
    }
}

} // namespace zeta27

#endif
