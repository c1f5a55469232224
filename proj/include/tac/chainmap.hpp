#pragma once

#include "tac/complex.hpp"

namespace tac {

namespace detail {
// shared fold-through-periodicity for degree-indexed families of maps
std::optional<int> fold_window(int n, int lo, int hi, const std::optional<Periodicity>& per);
}  // namespace detail

// A degreewise map f_n : source_n -> target_n, stored on a finite window
// with optional periodic extension and zero outside.
class ChainMap {
public:
    ChainMap(ChainComplex src, ChainComplex tgt, std::map<int, FreeMap> comps,
             std::optional<Periodicity> per = std::nullopt);

    static ChainMap identity(const ChainComplex& c, int lo, int hi);
    static ChainMap zero(ChainComplex src, ChainComplex tgt);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::optional<Periodicity>& periodicity() const { return per_; }

    FreeMap component(int n) const;

    // commutation f_{n-1} d_n = d_n f_n checked for every n in [lo, hi]
    ComplexReport check_commutes(int lo, int hi) const;
    void ensure_chain_map(int lo, int hi, const std::string& where) const;

    ChainMap compose(const ChainMap& g) const;  // this after g
    ChainMap add(const ChainMap& o) const;
    ChainMap sub(const ChainMap& o) const;
    ChainMap negate() const;

private:
    ChainComplex src_, tgt_;
    int lo_, hi_;
    std::map<int, FreeMap> comp_;
    std::optional<Periodicity> per_;
};

// sigma_n : source_n -> target_{n+1} certifying that two chain maps agree
// up to homotopy
class Homotopy {
public:
    Homotopy(ChainComplex src, ChainComplex tgt, std::map<int, FreeMap> comps,
             std::optional<Periodicity> per = std::nullopt);

    static Homotopy zero(ChainComplex src, ChainComplex tgt);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    FreeMap component(int n) const;
    const std::optional<Periodicity>& periodicity() const { return per_; }

    // f - g = sigma d + d sigma at every degree in [lo, hi]
    bool certifies(const ChainMap& f, const ChainMap& g, int lo, int hi) const;
    // same, against g = 0 (null-homotopy of f)
    bool certifies_null(const ChainMap& f, int lo, int hi) const;

private:
    ChainComplex src_, tgt_;
    int lo_, hi_;
    std::map<int, FreeMap> comp_;
    std::optional<Periodicity> per_;
};

}  // namespace tac
