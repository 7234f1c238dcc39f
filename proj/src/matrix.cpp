#include "ghc/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ghc/kern/kernels.hpp"

namespace ghc {

GHMatrix::GHMatrix(FieldPtr field, size_t n, std::vector<felt_t> entries)
    : f_(std::move(field)), n_(n), a_(std::move(entries)) {
    if (n_ == 0 || a_.size() != n_ * n_) fail(Errc::SizeMismatch, "entry table is not n x n");
    if (n_ % f_->q() != 0)
        fail(Errc::OrderNotMultipleOfQ,
             "order " + std::to_string(n_) + " is not a multiple of q = " + std::to_string(f_->q()));
    lambda_ = n_ / f_->q();
    for (felt_t x : a_)
        if (x >= f_->q()) fail(Errc::ParseError, "entry code out of field range");
}

bool GHMatrix::first_row_col_zero() const {
    for (size_t j = 0; j < n_; ++j)
        if (at(0, j) != 0) return false;
    for (size_t i = 0; i < n_; ++i)
        if (at(i, 0) != 0) return false;
    return true;
}

const std::vector<uint8_t>& GHMatrix::digit_mirror() const {
    if (digits_.empty()) {
        digits_.resize(n_ * n_ * kern::kDigitStride);
        for (size_t i = 0; i < n_ * n_; ++i)
            f_->write_digits(a_[i], digits_.data() + i * kern::kDigitStride, kern::kDigitStride);
    }
    return digits_;
}

namespace {

felt_t key_to_code(const Field& f, uint16_t key) {
    uint8_t d[4] = {uint8_t(key & 7), uint8_t((key >> 3) & 7), uint8_t((key >> 6) & 7),
                    uint8_t((key >> 9) & 7)};
    return f.from_digits(d);
}

VerifyReport verify_kernel_path(const GHMatrix& m) {
    const Field& f = *m.field();
    const size_t n = m.order();
    const auto& digits = m.digit_mirror();
    const auto& ops = kern::active_ops();
    const unsigned lambda = unsigned(m.lambda());

    std::vector<uint8_t> diff(n * kern::kDigitStride);
    std::vector<uint16_t> keys(n);
    std::vector<uint16_t> counts(kern::kKeySpace, 0);

    for (size_t i = 0; i + 1 < n; ++i) {
        const uint8_t* ri = digits.data() + i * n * kern::kDigitStride;
        for (size_t j = i + 1; j < n; ++j) {
            const uint8_t* rj = digits.data() + j * n * kern::kDigitStride;
            ops.sub_mod(diff.data(), ri, rj, n, uint8_t(f.p()));
            ops.pack_keys(keys.data(), diff.data(), n);
            size_t bad = n;
            for (size_t s = 0; s < n; ++s) {
                if (++counts[keys[s]] > lambda) {
                    bad = s;
                    break;
                }
            }
            if (bad == n) {
                for (size_t s = 0; s < n; ++s) --counts[keys[s]];
                continue;
            }
            const uint16_t key = keys[bad];
            unsigned full = 0;
            for (size_t s = 0; s < n; ++s)
                if (keys[s] == key) ++full;
            for (size_t s = 0; s <= bad; ++s) --counts[keys[s]];
            return {false, GhViolation{i, j, key_to_code(f, key), full}};
        }
    }
    return {true, std::nullopt};
}

VerifyReport verify_table_path(const GHMatrix& m) {
    const Field& f = *m.field();
    const size_t n = m.order();
    const unsigned lambda = unsigned(m.lambda());
    std::vector<uint16_t> counts(f.q(), 0);
    std::vector<felt_t> diff(n);

    for (size_t i = 0; i + 1 < n; ++i) {
        const auto ri = m.row(i);
        for (size_t j = i + 1; j < n; ++j) {
            const auto rj = m.row(j);
            for (size_t s = 0; s < n; ++s) diff[s] = f.sub(ri[s], rj[s]);
            size_t bad = n;
            for (size_t s = 0; s < n; ++s) {
                if (++counts[diff[s]] > lambda) {
                    bad = s;
                    break;
                }
            }
            if (bad == n) {
                for (size_t s = 0; s < n; ++s) --counts[diff[s]];
                continue;
            }
            const felt_t elem = diff[bad];
            unsigned full = 0;
            for (size_t s = 0; s < n; ++s)
                if (diff[s] == elem) ++full;
            for (size_t s = 0; s <= bad; ++s) --counts[diff[s]];
            return {false, GhViolation{i, j, elem, full}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

VerifyReport verify_gh(const GHMatrix& m, VerifyPath path) {
    switch (path) {
        case VerifyPath::Kernels:
            if (!m.kernel_path_supported())
                fail(Errc::ParamRange, "kernel verify path needs e <= 4 and p <= 7");
            return verify_kernel_path(m);
        case VerifyPath::Tables:
            return verify_table_path(m);
        case VerifyPath::Auto:
        default:
            return m.kernel_path_supported() ? verify_kernel_path(m) : verify_table_path(m);
    }
}

GHMatrix normalize(const GHMatrix& m) {
    if (!verify_gh(m).ok) fail(Errc::NotGH, "normalize requires a GH matrix");
    const Field& f = *m.field();
    const size_t n = m.order();
    std::vector<felt_t> a(m.entries());
    for (size_t j = 0; j < n; ++j) {
        const felt_t c = a[j];
        if (c == 0) continue;
        for (size_t i = 0; i < n; ++i) a[i * n + j] = f.sub(a[i * n + j], c);
    }
    for (size_t i = 0; i < n; ++i) {
        const felt_t c = a[i * n];
        if (c == 0) continue;
        for (size_t j = 0; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], c);
    }
    return GHMatrix(m.field(), n, std::move(a));
}

namespace {

void check_perm(const std::vector<size_t>& perm, size_t n) {
    if (perm.size() != n) fail(Errc::IndexOutOfRange, "permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (size_t v : perm) {
        if (v >= n || seen[v]) fail(Errc::IndexOutOfRange, "not a permutation");
        seen[v] = true;
    }
}

}  // namespace

GHMatrix permute_rows(const GHMatrix& m, const std::vector<size_t>& perm) {
    const size_t n = m.order();
    check_perm(perm, n);
    std::vector<felt_t> a(n * n);
    for (size_t i = 0; i < n; ++i) {
        const auto src = m.row(perm[i]);
        std::copy(src.begin(), src.end(), a.begin() + i * n);
    }
    return GHMatrix(m.field(), n, std::move(a));
}

GHMatrix permute_cols(const GHMatrix& m, const std::vector<size_t>& perm) {
    const size_t n = m.order();
    check_perm(perm, n);
    std::vector<felt_t> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, perm[j]);
    return GHMatrix(m.field(), n, std::move(a));
}

GHMatrix add_const_to_row(const GHMatrix& m, size_t i, felt_t c) {
    const size_t n = m.order();
    if (i >= n) fail(Errc::IndexOutOfRange, "row index out of range");
    if (c >= m.field()->q()) fail(Errc::IndexOutOfRange, "element code out of range");
    std::vector<felt_t> a(m.entries());
    const Field& f = *m.field();
    for (size_t j = 0; j < n; ++j) a[i * n + j] = f.add(a[i * n + j], c);
    return GHMatrix(m.field(), n, std::move(a));
}

GHMatrix add_const_to_col(const GHMatrix& m, size_t j, felt_t c) {
    const size_t n = m.order();
    if (j >= n) fail(Errc::IndexOutOfRange, "column index out of range");
    if (c >= m.field()->q()) fail(Errc::IndexOutOfRange, "element code out of range");
    std::vector<felt_t> a(m.entries());
    const Field& f = *m.field();
    for (size_t i = 0; i < n; ++i) a[i * n + j] = f.add(a[i * n + j], c);
    return GHMatrix(m.field(), n, std::move(a));
}

GHMatrix transpose(const GHMatrix& m) {
    const size_t n = m.order();
    std::vector<felt_t> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[j * n + i] = m.at(i, j);
    return GHMatrix(m.field(), n, std::move(a));
}

CodePair extract_codes(const GHMatrix& m) {
    if (!m.first_row_col_zero())
        fail(Errc::NotNormalized, "extract_codes requires a normalized matrix");
    const Field& f = *m.field();
    const size_t n = m.order();
    const unsigned q = f.q();

    Code f_h = Code::from_flat(m.field(), n, m.entries());
    if (f_h.size() != n) fail(Errc::NotGH, "duplicate rows; not a GH matrix");

    std::vector<felt_t> flat;
    flat.reserve(size_t(q) * n * n);
    for (unsigned alpha = 0; alpha < q; ++alpha)
        for (size_t i = 0; i < n; ++i) {
            const auto r = m.row(i);
            for (size_t j = 0; j < n; ++j) flat.push_back(f.add(r[j], felt_t(alpha)));
        }
    Code c_h = Code::from_flat(m.field(), n, std::move(flat));
    if (c_h.size() != size_t(q) * n)
        fail(Errc::NotGH, "constant cosets overlap; not a normalized GH matrix");
    return {std::move(f_h), std::move(c_h)};
}

std::string to_ghm(const GHMatrix& m) {
    std::string out;
    out += "GHM 1\n";
    out += "field p=" + std::to_string(m.field()->p()) + " e=" + std::to_string(m.field()->e()) +
           " poly=" + m.field()->poly_string() + "\n";
    out += "order n=" + std::to_string(m.order()) + "\n";
    const size_t n = m.order();
    for (size_t i = 0; i < n; ++i) {
        const auto r = m.row(i);
        for (size_t j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += std::to_string(r[j]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!lines.empty() && !line.empty() && line[0] == '#') continue;  // annotation
        lines.push_back(line);
    }
    return lines;
}

unsigned long long parse_uint(const std::string& s, const char* what) {
    unsigned long long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(Errc::ParseError, std::string("bad ") + what + ": '" + s + "'");
    return v;
}

std::string expect_prefix(const std::string& s, const std::string& prefix, const char* what) {
    if (s.rfind(prefix, 0) != 0)
        fail(Errc::ParseError, std::string("expected '") + prefix + "' in " + what);
    return s.substr(prefix.size());
}

}  // namespace

GHMatrix from_ghm(const std::string& text, bool allow_large) {
    const auto lines = logical_lines(text);
    if (lines.size() < 3) fail(Errc::ParseError, "truncated .ghm input");
    if (lines[0] != "GHM 1") fail(Errc::ParseError, "missing 'GHM 1' magic line");

    std::istringstream fl(lines[1]);
    std::string tag, ps, es, polys;
    fl >> tag >> ps >> es >> polys;
    if (tag != "field" || fl.fail()) fail(Errc::ParseError, "bad field line");
    const unsigned p = unsigned(parse_uint(expect_prefix(ps, "p=", "field line"), "p"));
    const unsigned e = unsigned(parse_uint(expect_prefix(es, "e=", "field line"), "e"));
    const std::string poly_body = expect_prefix(polys, "poly=", "field line");
    std::optional<std::vector<uint8_t>> poly;
    if (!poly_body.empty()) {
        std::vector<uint8_t> cs;
        std::string cur;
        std::istringstream ps2(poly_body);
        while (std::getline(ps2, cur, ','))
            cs.push_back(uint8_t(parse_uint(cur, "poly coefficient")));
        poly = std::move(cs);
    }

    const std::string order_body = expect_prefix(lines[2], "order n=", "order line");
    const size_t n = size_t(parse_uint(order_body, "n"));
    if (lines.size() < 3 + n) fail(Errc::ParseError, ".ghm row count mismatch");

    FieldPtr f = make_field(p, e, poly, allow_large);
    std::vector<felt_t> a;
    a.reserve(n * n);
    for (size_t i = 0; i < n; ++i) {
        std::istringstream rs(lines[3 + i]);
        std::string tok;
        size_t cnt = 0;
        while (rs >> tok) {
            const auto v = parse_uint(tok, "entry");
            if (v >= f->q()) fail(Errc::ParseError, "entry code out of field range");
            a.push_back(felt_t(v));
            ++cnt;
        }
        if (cnt != n) fail(Errc::ParseError, "row " + std::to_string(i + 1) + " has wrong length");
    }
    return GHMatrix(std::move(f), n, std::move(a));
}

GHMatrix read_ghm_file(const std::string& path, bool allow_large) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_ghm(ss.str(), allow_large);
}

void write_ghm_file(const GHMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::Io, "cannot open " + path + " for writing");
    out << to_ghm(m);
    if (!out) fail(Errc::Io, "write failed: " + path);
}

}  // namespace ghc
