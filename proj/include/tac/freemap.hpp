#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tac/groebner.hpp"

namespace tac {

// A matrix over a quotient ring, viewed as a map between free modules
// (columns are images of the source basis vectors). Entries are stored in
// ring normal form, so equality of maps is equality of entries. Immutable;
// the column Groebner basis and the kernel are cached lazily.
class FreeMap {
public:
    FreeMap(QuotientRing ring, std::size_t rows, std::size_t cols,
            std::vector<Polynomial> entries_row_major);

    static FreeMap zero(QuotientRing ring, std::size_t rows, std::size_t cols);
    static FreeMap identity(QuotientRing ring, std::size_t n);
    static FreeMap scalar(QuotientRing ring, std::size_t n, const Polynomial& c);
    static FreeMap from_columns(QuotientRing ring, std::size_t rows,
                                const std::vector<VecPoly>& cols);

    const QuotientRing& ring() const;
    std::size_t rows() const;
    std::size_t cols() const;
    const Polynomial& entry(std::size_t i, std::size_t j) const;

    VecPoly column(std::size_t j) const;
    std::vector<VecPoly> columns() const;
    VecPoly apply(const VecPoly& v) const;

    bool is_zero() const;
    bool is_identity() const;

    FreeMap compose(const FreeMap& g) const;  // this after g, matrix product this * g
    FreeMap add(const FreeMap& o) const;
    FreeMap sub(const FreeMap& o) const;
    FreeMap negate() const;
    FreeMap scale(Coeff c) const;
    FreeMap scale_poly(const Polynomial& p) const;
    FreeMap transpose() const;

    bool operator==(const FreeMap& o) const;
    bool operator!=(const FreeMap& o) const { return !(*this == o); }

    // Groebner basis of the column span (shared, computed once)
    const ModuleGB& column_gb() const;

    // X with this * X = b, or nullopt when some column of b is not in the
    // column span
    std::optional<FreeMap> solve_right(const FreeMap& b) const;
    // X with X * this = b
    std::optional<FreeMap> solve_left(const FreeMap& b) const;

    // canonical minimal generating set of the kernel submodule, as columns:
    // redundant generators dropped, each column scaled so the last nonzero
    // component is monic, columns ordered by increasing leading-term degree
    // with ties by decreasing leading module term
    const FreeMap& kernel() const;

    // the entries all lie in the maximal ideal (no unit entries)
    bool entries_in_radical() const;

    // matrix of constant terms, as field elements
    std::vector<std::vector<Coeff>> constant_matrix() const;

private:
    struct Impl;
    std::shared_ptr<Impl> im_;
};

// canonicalization helpers shared with resolution code
VecPoly sign_normalize_column(const QuotientRing& ring, const VecPoly& v);
std::vector<VecPoly> canonical_column_order(const std::vector<VecPoly>& cols);
// drop generators lying in the span of the others, scanning last to first;
// keeps the surviving input order
std::vector<VecPoly> minimal_generator_subset(const QuotientRing& ring, std::size_t rank,
                                              const std::vector<VecPoly>& gens);

// text form of the session grammar: rows of entries, e.g. [[x,-y],[0,x]]
std::string print_matrix(const FreeMap& m);
FreeMap parse_matrix(const QuotientRing& ring, const std::string& text, int line = 0,
                     int col0 = 0);

// rank of a matrix of field scalars (row reduction over the prime field)
std::size_t scalar_rank(const PrimeField& k, std::vector<std::vector<Coeff>> m);
bool scalar_invertible(const PrimeField& k, const std::vector<std::vector<Coeff>>& m);

}  // namespace tac
