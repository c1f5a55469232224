#include "tac/linsolve.hpp"

#include "tac/errors.hpp"

namespace tac {

namespace {

struct Flattened {
    FreeMap e;
    FreeMap c;
    std::vector<std::size_t> offsets;  // first column index of each unknown
    std::size_t nunk;
};

Flattened flatten(const QuotientRing& ring,
                  const std::vector<MatrixUnknown>& unknowns,
                  const std::vector<MatrixEquation>& equations) {
    const PrimeField& k = ring.field();
    std::vector<std::size_t> off(unknowns.size() + 1, 0);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        off[u + 1] = off[u] + unknowns[u].rows * unknowns[u].cols;
    std::size_t ncols = off.back();

    std::size_t nrows = 0;
    for (const auto& eq : equations) nrows += eq.rhs.rows() * eq.rhs.cols();

    std::vector<Polynomial> ee(nrows * ncols);
    std::vector<Polynomial> cc(nrows);
    std::size_t base = 0;
    for (const auto& eq : equations) {
        std::size_t re = eq.rhs.rows(), ce = eq.rhs.cols();
        for (std::size_t i = 0; i < re; ++i)
            for (std::size_t j = 0; j < ce; ++j)
                cc[base + i * ce + j] = eq.rhs.entry(i, j);
        for (const auto& t : eq.terms) {
            if (t.unknown >= unknowns.size()) throw Error("matrix system: bad unknown index");
            const MatrixUnknown& x = unknowns[t.unknown];
            std::size_t rx = x.rows, cx = x.cols;
            if (t.left && (t.left->rows() != re || t.left->cols() != rx))
                throw ShapeError("matrix system: left factor shape");
            if (!t.left && rx != re) throw ShapeError("matrix system: term rows");
            if (t.right && (t.right->rows() != cx || t.right->cols() != ce))
                throw ShapeError("matrix system: right factor shape");
            if (!t.right && cx != ce) throw ShapeError("matrix system: term cols");
            // coefficient of X[p][q] in entry (i, j) of A * X * B is A[i][p] * B[q][j]
            for (std::size_t p = 0; p < rx; ++p) {
                for (std::size_t q = 0; q < cx; ++q) {
                    std::size_t col = off[t.unknown] + p * cx + q;
                    for (std::size_t i = 0; i < re; ++i) {
                        if (t.left) {
                            if (t.left->entry(i, p).is_zero()) continue;
                        } else if (i != p) {
                            continue;
                        }
                        for (std::size_t j = 0; j < ce; ++j) {
                            Polynomial coeff;
                            if (t.left && t.right)
                                coeff = mul(k, t.left->entry(i, p), t.right->entry(q, j));
                            else if (t.left)
                                coeff = (q == j) ? t.left->entry(i, p) : Polynomial::zero();
                            else if (t.right)
                                coeff = t.right->entry(q, j);
                            else
                                coeff = (q == j) ? Polynomial::constant(k, 1, ring.nvars())
                                                 : Polynomial::zero();
                            if (coeff.is_zero()) continue;
                            if (t.negated) coeff = negate(k, coeff);
                            std::size_t row = base + i * ce + j;
                            ee[row * ncols + col] = add(k, ee[row * ncols + col], coeff);
                        }
                    }
                }
            }
        }
        base += re * ce;
    }
    return {FreeMap(ring, nrows, ncols, std::move(ee)),
            FreeMap(ring, nrows, 1, std::move(cc)), std::move(off), unknowns.size()};
}

std::vector<FreeMap> unflatten(const QuotientRing& ring,
                               const std::vector<MatrixUnknown>& unknowns,
                               const std::vector<std::size_t>& off,
                               const FreeMap& xi, std::size_t col) {
    std::vector<FreeMap> out;
    out.reserve(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        std::vector<Polynomial> e(unknowns[u].rows * unknowns[u].cols);
        for (std::size_t t = 0; t < e.size(); ++t) e[t] = xi.entry(off[u] + t, col);
        out.emplace_back(ring, unknowns[u].rows, unknowns[u].cols, std::move(e));
    }
    return out;
}

}  // namespace

std::optional<std::vector<FreeMap>> solve_matrix_system(
    const QuotientRing& ring, const std::vector<MatrixUnknown>& unknowns,
    const std::vector<MatrixEquation>& equations) {
    Flattened f = flatten(ring, unknowns, equations);
    auto xi = f.e.solve_right(f.c);
    if (!xi) return std::nullopt;
    return unflatten(ring, unknowns, f.offsets, *xi, 0);
}

std::vector<std::vector<FreeMap>> matrix_system_kernel(
    const QuotientRing& ring, const std::vector<MatrixUnknown>& unknowns,
    const std::vector<MatrixEquation>& equations) {
    Flattened f = flatten(ring, unknowns, equations);
    FreeMap ker = f.e.kernel();
    std::vector<std::vector<FreeMap>> out;
    out.reserve(ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        out.push_back(unflatten(ring, unknowns, f.offsets, ker, j));
    return out;
}

}  // namespace tac
