#include "tac/freemap.hpp"

#include <algorithm>

#include "tac/errors.hpp"

namespace tac {

struct FreeMap::Impl {
    QuotientRing ring;
    std::size_t rows, cols;
    std::vector<Polynomial> e;  // row-major, nf'd

    mutable std::shared_ptr<ModuleGB> gb;
    mutable std::shared_ptr<FreeMap> ker;

    Impl(QuotientRing r, std::size_t nr, std::size_t nc, std::vector<Polynomial> entries)
        : ring(std::move(r)), rows(nr), cols(nc), e(std::move(entries)) {}
};

FreeMap::FreeMap(QuotientRing ring, std::size_t rows, std::size_t cols,
                 std::vector<Polynomial> entries_row_major) {
    if (entries_row_major.size() != rows * cols)
        throw ShapeError("matrix entry count does not match its shape");
    for (auto& p : entries_row_major) p = ring.nf(p);
    im_ = std::make_shared<Impl>(std::move(ring), rows, cols, std::move(entries_row_major));
}

FreeMap FreeMap::zero(QuotientRing ring, std::size_t rows, std::size_t cols) {
    return FreeMap(std::move(ring), rows, cols, std::vector<Polynomial>(rows * cols));
}

FreeMap FreeMap::identity(QuotientRing ring, std::size_t n) {
    Polynomial one = Polynomial::constant(ring.field(), 1, ring.nvars());
    std::vector<Polynomial> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = one;
    return FreeMap(std::move(ring), n, n, std::move(e));
}

FreeMap FreeMap::scalar(QuotientRing ring, std::size_t n, const Polynomial& c) {
    std::vector<Polynomial> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = c;
    return FreeMap(std::move(ring), n, n, std::move(e));
}

FreeMap FreeMap::from_columns(QuotientRing ring, std::size_t rows,
                              const std::vector<VecPoly>& cols) {
    std::vector<Polynomial> e(rows * cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("column rank mismatch");
        for (std::size_t i = 0; i < rows; ++i) e[i * cols.size() + j] = cols[j][i];
    }
    return FreeMap(std::move(ring), rows, cols.size(), std::move(e));
}

const QuotientRing& FreeMap::ring() const { return im_->ring; }
std::size_t FreeMap::rows() const { return im_->rows; }
std::size_t FreeMap::cols() const { return im_->cols; }

const Polynomial& FreeMap::entry(std::size_t i, std::size_t j) const {
    if (i >= im_->rows || j >= im_->cols) throw ShapeError("matrix index out of range");
    return im_->e[i * im_->cols + j];
}

VecPoly FreeMap::column(std::size_t j) const {
    VecPoly v(im_->rows);
    for (std::size_t i = 0; i < im_->rows; ++i) v[i] = entry(i, j);
    return v;
}

std::vector<VecPoly> FreeMap::columns() const {
    std::vector<VecPoly> out;
    out.reserve(im_->cols);
    for (std::size_t j = 0; j < im_->cols; ++j) out.push_back(column(j));
    return out;
}

VecPoly FreeMap::apply(const VecPoly& v) const {
    if (v.size() != im_->cols) throw ShapeError("vector rank does not match matrix columns");
    const PrimeField& k = im_->ring.field();
    VecPoly r(im_->rows);
    for (std::size_t i = 0; i < im_->rows; ++i) {
        Polynomial acc;
        for (std::size_t j = 0; j < im_->cols; ++j)
            acc = tac::add(k, acc, mul(k, entry(i, j), v[j]));
        r[i] = im_->ring.nf(acc);
    }
    return r;
}

bool FreeMap::is_zero() const {
    for (const auto& p : im_->e)
        if (!p.is_zero()) return false;
    return true;
}

bool FreeMap::is_identity() const {
    if (im_->rows != im_->cols) return false;
    return *this == identity(im_->ring, im_->rows);
}

FreeMap FreeMap::compose(const FreeMap& g) const {
    if (!im_->ring.same_ring(g.ring())) throw RingError("composition across different rings");
    if (im_->cols != g.rows()) throw ShapeError("composition shape mismatch");
    const PrimeField& k = im_->ring.field();
    std::vector<Polynomial> e(im_->rows * g.cols());
    for (std::size_t i = 0; i < im_->rows; ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            Polynomial acc;
            for (std::size_t t = 0; t < im_->cols; ++t)
                acc = tac::add(k, acc, mul(k, entry(i, t), g.entry(t, j)));
            e[i * g.cols() + j] = acc;
        }
    return FreeMap(im_->ring, im_->rows, g.cols(), std::move(e));
}

FreeMap FreeMap::add(const FreeMap& o) const {
    if (im_->rows != o.rows() || im_->cols != o.cols()) throw ShapeError("sum shape mismatch");
    const PrimeField& k = im_->ring.field();
    std::vector<Polynomial> e(im_->e.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = tac::add(k, im_->e[t], o.im_->e[t]);
    return FreeMap(im_->ring, im_->rows, im_->cols, std::move(e));
}

FreeMap FreeMap::sub(const FreeMap& o) const { return add(o.negate()); }

FreeMap FreeMap::negate() const {
    const PrimeField& k = im_->ring.field();
    std::vector<Polynomial> e(im_->e.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = tac::negate(k, im_->e[t]);
    return FreeMap(im_->ring, im_->rows, im_->cols, std::move(e));
}

FreeMap FreeMap::scale(Coeff c) const {
    const PrimeField& k = im_->ring.field();
    std::vector<Polynomial> e(im_->e.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = tac::scale(k, im_->e[t], c);
    return FreeMap(im_->ring, im_->rows, im_->cols, std::move(e));
}

FreeMap FreeMap::scale_poly(const Polynomial& p) const {
    const PrimeField& k = im_->ring.field();
    std::vector<Polynomial> e(im_->e.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = mul(k, im_->e[t], p);
    return FreeMap(im_->ring, im_->rows, im_->cols, std::move(e));
}

FreeMap FreeMap::transpose() const {
    std::vector<Polynomial> e(im_->e.size());
    for (std::size_t i = 0; i < im_->rows; ++i)
        for (std::size_t j = 0; j < im_->cols; ++j) e[j * im_->rows + i] = entry(i, j);
    return FreeMap(im_->ring, im_->cols, im_->rows, std::move(e));
}

bool FreeMap::operator==(const FreeMap& o) const {
    return im_->rows == o.rows() && im_->cols == o.cols() && im_->ring.same_ring(o.ring()) &&
           im_->e == o.im_->e;
}

const ModuleGB& FreeMap::column_gb() const {
    if (!im_->gb) im_->gb = std::make_shared<ModuleGB>(im_->ring, im_->rows, columns());
    return *im_->gb;
}

std::optional<FreeMap> FreeMap::solve_right(const FreeMap& b) const {
    if (b.rows() != im_->rows) throw ShapeError("solve shape mismatch");
    const ModuleGB& gb = column_gb();
    std::vector<Polynomial> e(im_->cols * b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto w = gb.witness(b.column(j));
        if (!w) return std::nullopt;
        for (std::size_t i = 0; i < im_->cols; ++i) e[i * b.cols() + j] = (*w)[i];
    }
    return FreeMap(im_->ring, im_->cols, b.cols(), std::move(e));
}

std::optional<FreeMap> FreeMap::solve_left(const FreeMap& b) const {
    if (b.cols() != im_->cols) throw ShapeError("solve shape mismatch");
    auto xt = transpose().solve_right(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

VecPoly sign_normalize_column(const QuotientRing& ring, const VecPoly& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (!v[i].is_zero()) {
            Coeff lc = v[i].leading_coeff();
            if (lc == 1) return v;
            return vec_scale(ring.field(), v, ring.field().inv(lc));
        }
    }
    return v;
}

std::vector<VecPoly> canonical_column_order(const std::vector<VecPoly>& cols) {
    std::vector<VecPoly> out = cols;
    std::stable_sort(out.begin(), out.end(), [](const VecPoly& a, const VecPoly& b) {
        ModuleTerm la = vec_leading(a), lb = vec_leading(b);
        int da = la.m.degree(), db = lb.m.degree();
        if (da != db) return da < db;
        return module_term_compare(la, lb) > 0;
    });
    return out;
}

std::vector<VecPoly> minimal_generator_subset(const QuotientRing& ring, std::size_t rank,
                                              const std::vector<VecPoly>& gens) {
    std::vector<VecPoly> kept = gens;
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<VecPoly> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModuleGB gb(ring, rank, others);
        if (gb.contains(kept[i])) kept.erase(kept.begin() + i);
    }
    return kept;
}

const FreeMap& FreeMap::kernel() const {
    if (!im_->ker) {
        std::vector<VecPoly> syz = column_gb().syzygies();
        syz = minimal_generator_subset(im_->ring, im_->cols, syz);
        for (auto& v : syz) v = sign_normalize_column(im_->ring, v);
        syz = canonical_column_order(syz);
        im_->ker = std::make_shared<FreeMap>(from_columns(im_->ring, im_->cols, syz));
    }
    return *im_->ker;
}

bool FreeMap::entries_in_radical() const {
    for (const auto& p : im_->e)
        if (p.constant_term() != 0) return false;
    return true;
}

std::vector<std::vector<Coeff>> FreeMap::constant_matrix() const {
    std::vector<std::vector<Coeff>> m(im_->rows, std::vector<Coeff>(im_->cols, 0));
    for (std::size_t i = 0; i < im_->rows; ++i)
        for (std::size_t j = 0; j < im_->cols; ++j) m[i][j] = entry(i, j).constant_term();
    return m;
}

std::string print_matrix(const FreeMap& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += m.ring().print(m.entry(i, j));
        }
        s += "]";
    }
    return s + "]";
}

FreeMap parse_matrix(const QuotientRing& ring, const std::string& text, int line, int col0) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(msg, line, col0 + static_cast<int>(pos));
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    std::vector<std::vector<Polynomial>> rows;
    expect('[');
    skip();
    while (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<Polynomial> row;
        skip();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            for (;;) {
                // an entry runs to the next comma or closing bracket at depth zero
                std::size_t start = pos;
                while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
                if (pos >= text.size()) fail("unterminated matrix row");
                row.push_back(
                    ring.parse(text.substr(start, pos - start), line, col0 + (int)start));
                if (text[pos] == ']') {
                    ++pos;
                    break;
                }
                ++pos;  // comma
            }
        }
        rows.push_back(std::move(row));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip();
        }
    }
    expect(']');
    skip();
    if (pos != text.size()) fail("trailing text after matrix");
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != nc) fail("rows of unequal length");
    std::vector<Polynomial> e;
    e.reserve(nr * nc);
    for (auto& r : rows)
        for (auto& p : r) e.push_back(std::move(p));
    return FreeMap(ring, nr, nc, std::move(e));
}

std::size_t scalar_rank(const PrimeField& k, std::vector<std::vector<Coeff>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t nr = m.size(), nc = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[rank], m[piv]);
        Coeff inv = k.inv(m[rank][col]);
        for (std::size_t j = col; j < nc; ++j) m[rank][j] = k.mul(m[rank][j], inv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Coeff f = m[i][col];
            for (std::size_t j = col; j < nc; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

bool scalar_invertible(const PrimeField& k, const std::vector<std::vector<Coeff>>& m) {
    if (m.size() == 0) return true;
    if (m.size() != m[0].size()) return false;
    return scalar_rank(k, m) == m.size();
}

}  // namespace tac
