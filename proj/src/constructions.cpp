#include "ghc/constructions.hpp"

#include <algorithm>

namespace ghc {

GHMatrix sylvester(const FieldPtr& field, unsigned h) {
    if (h < 1) fail(Errc::ParamRange, "sylvester needs h >= 1");
    const Field& f = *field;
    const unsigned q = f.q();
    std::vector<felt_t> a(size_t(q) * q);
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j) a[size_t(i) * q + j] = f.mul(f.idx(i), f.idx(j));
    GHMatrix m(field, q, std::move(a));
    for (unsigned k = 1; k < h; ++k) m = kronecker_sum(sylvester(field, 1), m);
    return m;
}

GHMatrix kronecker_sum(const GHMatrix& h, const GHMatrix& b) {
    return kronecker_sum(h, std::vector<GHMatrix>{b});
}

GHMatrix kronecker_sum(const GHMatrix& h, const std::vector<GHMatrix>& bs) {
    if (bs.empty()) fail(Errc::SizeMismatch, "kronecker sum needs at least one B block");
    const size_t n = h.order();
    if (bs.size() != 1 && bs.size() != n)
        fail(Errc::SizeMismatch, "need one B matrix or one per row of H");
    const Field& f = *h.field();
    const size_t m = bs[0].order();
    for (const auto& bi : bs) {
        if (!bi.field()->same(f)) fail(Errc::FieldMismatch, "B blocks over a different field");
        if (bi.order() != m) fail(Errc::SizeMismatch, "B blocks of unequal order");
    }
    const size_t nm = n * m;
    std::vector<felt_t> a(nm * nm);
    for (size_t i = 0; i < n; ++i) {
        const GHMatrix& bi = bs.size() == 1 ? bs[0] : bs[i];
        for (size_t j = 0; j < n; ++j) {
            const felt_t hij = h.at(i, j);
            for (size_t r = 0; r < m; ++r) {
                felt_t* dst = a.data() + (i * m + r) * nm + j * m;
                const auto src = bi.row(r);
                for (size_t c = 0; c < m; ++c) dst[c] = f.add(hij, src[c]);
            }
        }
    }
    return GHMatrix(h.field(), nm, std::move(a));
}

std::vector<felt_t> block_vector(const Field& f, size_t n, unsigned z, unsigned j) {
    const unsigned q = f.q();
    size_t qz = 1;
    for (unsigned i = 0; i < z; ++i) qz *= q;
    const size_t start = size_t(j) * qz;
    if (z < 1 || j < 1 || start + qz > n)
        fail(Errc::ParamRange, "block vector support out of range");
    const size_t rep = qz / q;  // q^{z-1}
    std::vector<felt_t> g(n, 0);
    for (size_t o = 0; o < qz; ++o) g[start + o] = f.idx(unsigned(o / rep));
    return g;
}

namespace {

// v_i over q^h coordinates: the element sequence 0,1,w,... with each symbol
// repeated q^{i-1} times, tiled.
std::vector<felt_t> sylvester_generator(const Field& f, size_t n, unsigned i) {
    const unsigned q = f.q();
    size_t rep = 1;
    for (unsigned k = 1; k < i; ++k) rep *= q;
    std::vector<felt_t> v(n);
    for (size_t pos = 0; pos < n; ++pos) v[pos] = f.idx(unsigned((pos / rep) % q));
    return v;
}

void add_scaled(const Field& f, std::vector<felt_t>& acc, felt_t c,
                const std::vector<felt_t>& v) {
    if (c == 0) return;
    for (size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], f.mul(c, v[i]));
}

}  // namespace

GHMatrix switching_i(unsigned p, unsigned e) {
    if (e <= 1) fail(Errc::DegreeOne, "switching I needs e > 1");
    FieldPtr field = make_field(p, e);
    const Field& f = *field;
    const unsigned q = f.q();
    const size_t n = size_t(q) * q;

    const auto v1 = sylvester_generator(f, n, 1);
    const auto v2 = sylvester_generator(f, n, 2);
    std::vector<felt_t> g(n, 0);
    for (unsigned o = 0; o < q; ++o) g[n - q + o] = f.idx(o);

    std::vector<felt_t> a;
    a.reserve(n * n);
    for (unsigned bi = 0; bi < q; ++bi) {
        const felt_t beta = f.idx(bi);
        std::vector<felt_t> shift(n, 0);
        add_scaled(f, shift, beta, v1);
        add_scaled(f, shift, f.digit(beta, e - 1), g);
        for (unsigned ci = 0; ci < q; ++ci) {
            std::vector<felt_t> row = shift;
            add_scaled(f, row, f.idx(ci), v2);
            a.insert(a.end(), row.begin(), row.end());
        }
    }
    return GHMatrix(std::move(field), n, std::move(a));
}

GHMatrix switching_ii(unsigned p, unsigned e, unsigned h, unsigned s) {
    if (e <= 1 || h <= 1 || s < 1 || s > e - 1)
        fail(Errc::ParamRange, "switching II needs e > 1, h > 1, 1 <= s <= e-1");
    return switching_iii(p, e, h, std::vector<unsigned>{s});
}

GHMatrix switching_iii(unsigned p, unsigned e, unsigned h, const std::vector<unsigned>& s_list) {
    const unsigned m = unsigned(s_list.size());
    if (e <= 1 || h <= 1 || m < 1 || m > h - 1)
        fail(Errc::ParamRange, "switching III needs e > 1, h > 1, 1 <= |s_list| <= h-1");
    for (unsigned s : s_list)
        if (s < 1 || s > e - 1) fail(Errc::ParamRange, "each s_z must lie in 1..e-1");

    FieldPtr field = make_field(p, e);
    const Field& f = *field;
    const unsigned q = f.q();
    size_t n = 1;
    for (unsigned i = 0; i < h; ++i) n *= q;

    std::vector<std::vector<felt_t>> v(h + 1);
    for (unsigned i = 1; i <= h; ++i) v[i] = sylvester_generator(f, n, i);
    // g[z][j], z = 1..m, j = 1..s_z
    std::vector<std::vector<std::vector<felt_t>>> g(m + 1);
    for (unsigned z = 1; z <= m; ++z) {
        g[z].resize(s_list[z - 1] + 1);
        for (unsigned j = 1; j <= s_list[z - 1]; ++j) g[z][j] = block_vector(f, n, z, j);
    }

    // K = <v_{m+1}, ..., v_h>, rows enumerated with c_{m+1} most significant.
    const unsigned kdim = h - m;
    size_t ksize = 1;
    for (unsigned i = 0; i < kdim; ++i) ksize *= q;
    std::vector<std::vector<felt_t>> krows;
    krows.reserve(ksize);
    for (size_t idx = 0; idx < ksize; ++idx) {
        std::vector<felt_t> row(n, 0);
        size_t rem = idx;
        size_t div = ksize;
        for (unsigned i = 0; i < kdim; ++i) {
            div /= q;
            const unsigned ci = unsigned(rem / div);
            rem %= div;
            add_scaled(f, row, f.idx(ci), v[m + 1 + i]);
        }
        krows.push_back(std::move(row));
    }

    size_t labels = 1;
    for (unsigned z = 0; z < m; ++z) labels *= q;
    std::vector<felt_t> a;
    a.reserve(n * n);
    for (size_t li = 0; li < labels; ++li) {
        std::vector<felt_t> shift(n, 0);
        size_t rem = li;
        size_t div = labels;
        for (unsigned z = 1; z <= m; ++z) {
            div /= q;
            const felt_t beta = f.idx(unsigned(rem / div));
            rem %= div;
            add_scaled(f, shift, beta, v[z]);
            for (unsigned j = 1; j <= s_list[z - 1]; ++j)
                add_scaled(f, shift, f.digit(beta, j), g[z][j]);
        }
        for (const auto& krow : krows) {
            const size_t base = a.size();
            a.insert(a.end(), shift.begin(), shift.end());
            for (size_t c = 0; c < n; ++c)
                if (krow[c] != 0) a[base + c] = f.add(a[base + c], krow[c]);
        }
    }
    return GHMatrix(std::move(field), n, std::move(a));
}

GHMatrix projection_construction(unsigned p, unsigned e, unsigned t, bool allow_large) {
    if (!(t > e && e > 1)) fail(Errc::ParamRange, "projection needs t > e > 1");
    FieldPtr src = make_field(p, t, {}, allow_large);
    FieldPtr dst = make_field(p, e);
    const size_t n = src->q();
    std::vector<felt_t> a(n * n);
    for (size_t i = 0; i < n; ++i) {
        const felt_t ri = src->idx(unsigned(i));
        for (size_t j = 0; j < n; ++j)
            a[i * n + j] = project_code(*src, src->mul(ri, src->idx(unsigned(j))), *dst);
    }
    return GHMatrix(std::move(dst), n, std::move(a));
}

GHMatrix gh_p2_one(unsigned p) {
    if (p == 2) fail(Errc::EvenPrime, "only the linear H(4,1) exists for p = 2");
    if (!is_prime(p)) fail(Errc::NonPrime, "p must be an odd prime");
    FieldPtr field = make_field(p, 2);
    const Field& f = *field;
    const size_t n = f.q();

    std::vector<felt_t> v1(n, 0), v2(n, 0);
    for (size_t pos = 1; pos < n; ++pos) {
        v1[pos] = f.exp((long long)pos - 1);
        v2[pos] = f.exp((long long)pos * p);
    }

    std::vector<felt_t> a;
    a.reserve(n * n);
    for (unsigned lam = 0; lam < p; ++lam)
        for (unsigned gam = 0; gam < p; ++gam) {
            std::vector<felt_t> row(n, 0);
            add_scaled(f, row, felt_t(lam), v1);
            add_scaled(f, row, felt_t(gam), v2);
            a.insert(a.end(), row.begin(), row.end());
        }
    return GHMatrix(std::move(field), n, std::move(a));
}

namespace {

GHMatrix span_of_four(FieldPtr field, const std::vector<felt_t>& v1,
                      const std::vector<felt_t>& v2) {
    const Field& f = *field;
    const unsigned p = f.p();
    const size_t n = v1.size();
    std::vector<felt_t> wv1(n), wv2(n);
    for (size_t i = 0; i < n; ++i) {
        wv1[i] = f.mul(f.omega(), v1[i]);
        wv2[i] = f.mul(f.omega(), v2[i]);
    }
    std::vector<felt_t> a;
    a.reserve(n * n);
    for (unsigned c1 = 0; c1 < p; ++c1)
        for (unsigned c2 = 0; c2 < p; ++c2)
            for (unsigned c3 = 0; c3 < p; ++c3)
                for (unsigned c4 = 0; c4 < p; ++c4) {
                    std::vector<felt_t> row(n, 0);
                    add_scaled(f, row, felt_t(c1), v1);
                    add_scaled(f, row, felt_t(c2), wv1);
                    add_scaled(f, row, felt_t(c3), v2);
                    add_scaled(f, row, felt_t(c4), wv2);
                    a.insert(a.end(), row.begin(), row.end());
                }
    return GHMatrix(std::move(field), n, std::move(a));
}

// The power offsets in v2 are tied to a specific primitive element, so each
// fixture pins its polynomial: the defaults do not all satisfy the GH property
// with the published offsets. [3,1,1,0] is the smallest GF(5^4) choice that
// does; GF(3^4) keeps its default [1,1,0,0], which works as is.
GHMatrix fixed_q4_span(unsigned p, unsigned c0, unsigned step, std::vector<uint8_t> poly) {
    FieldPtr field = make_field(p, 4, std::move(poly));
    const Field& f = *field;
    const size_t n = f.q();
    std::vector<felt_t> v1(n, 0), v2(n, 0);
    for (size_t pos = 1; pos < n; ++pos) {
        v1[pos] = f.exp((long long)pos - 1);
        v2[pos] = f.exp((long long)c0 + (long long)step * ((long long)pos - 1));
    }
    return span_of_four(std::move(field), v1, v2);
}

}  // namespace

GHMatrix fixed_example(FixedId id) {
    switch (id) {
        case FixedId::H8_rank4:
            return from_ghm(fixtures::h8_rank4_ghm());
        case FixedId::H81_3:
            return fixed_q4_span(3, 2, 9, {1, 1, 0, 0});
        case FixedId::H81_5:
            return fixed_q4_span(5, 6, 25, {3, 1, 1, 0});
    }
    fail(Errc::UnknownId, "unknown fixed example id");
}

}  // namespace ghc
