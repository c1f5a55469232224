#include "tac/chainmap.hpp"

#include "tac/errors.hpp"

namespace tac {

namespace detail {
std::optional<int> fold_window(int n, int lo, int hi, const std::optional<Periodicity>& per) {
    if (n >= lo && n <= hi) return n;
    if (!per) return std::nullopt;
    int p = per->period;
    if (n > hi && per->above) {
        int m = n - p * ((n - hi + p - 1) / p);
        if (m >= lo && m >= *per->above) return m;
        return std::nullopt;
    }
    if (n < lo && per->below) {
        int m = n + p * ((lo - n + p - 1) / p);
        if (m <= hi && m <= *per->below + p) return m;
        return std::nullopt;
    }
    return std::nullopt;
}
}  // namespace detail

ChainMap::ChainMap(ChainComplex src, ChainComplex tgt, std::map<int, FreeMap> comps,
                   std::optional<Periodicity> per)
    : src_(std::move(src)), tgt_(std::move(tgt)), comp_(std::move(comps)), per_(std::move(per)) {
    if (!src_.ring().same_ring(tgt_.ring()))
        throw RingError("chain map between complexes over different rings");
    if (comp_.empty()) {
        lo_ = 0;
        hi_ = 0;
        comp_.emplace(0, FreeMap::zero(src_.ring(), tgt_.rank(0), src_.rank(0)));
    } else {
        lo_ = comp_.begin()->first;
        hi_ = comp_.rbegin()->first;
    }
    for (int n = lo_; n <= hi_; ++n) {
        auto it = comp_.find(n);
        if (it == comp_.end())
            throw ShapeError("missing chain map component at degree " + std::to_string(n));
        if (it->second.cols() != src_.rank(n) || it->second.rows() != tgt_.rank(n))
            throw ShapeError("chain map component shape mismatch at degree " + std::to_string(n));
        if (!it->second.ring().same_ring(src_.ring()))
            throw RingError("chain map component over a different ring");
    }
}

ChainMap ChainMap::identity(const ChainComplex& c, int lo, int hi) {
    std::map<int, FreeMap> comps;
    for (int n = lo; n <= hi; ++n) comps.emplace(n, FreeMap::identity(c.ring(), c.rank(n)));
    return ChainMap(c, c, std::move(comps), c.periodicity());
}

ChainMap ChainMap::zero(ChainComplex src, ChainComplex tgt) {
    std::map<int, FreeMap> comps;
    comps.emplace(0, FreeMap::zero(src.ring(), tgt.rank(0), src.rank(0)));
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

FreeMap ChainMap::component(int n) const {
    auto m = detail::fold_window(n, lo_, hi_, per_);
    if (m) return comp_.at(*m);
    return FreeMap::zero(src_.ring(), tgt_.rank(n), src_.rank(n));
}

ComplexReport ChainMap::check_commutes(int lo, int hi) const {
    for (int n = lo; n <= hi; ++n) {
        FreeMap lhs = component(n - 1).compose(src_.diff(n));
        FreeMap rhs = tgt_.diff(n).compose(component(n));
        if (!(lhs == rhs)) return {false, n, "chain map square does not commute"};
    }
    return {true, 0, ""};
}

void ChainMap::ensure_chain_map(int lo, int hi, const std::string& where) const {
    ComplexReport r = check_commutes(lo, hi);
    if (!r.ok)
        throw Error(where + ": not a chain map at degree " + std::to_string(r.degree));
}

ChainMap ChainMap::compose(const ChainMap& g) const {
    int lo = std::min(lo_, g.lo()), hi = std::max(hi_, g.hi());
    std::map<int, FreeMap> comps;
    for (int n = lo; n <= hi; ++n) comps.emplace(n, component(n).compose(g.component(n)));
    std::optional<Periodicity> per;
    if (per_ && g.per_ && *per_ == *g.per_) per = per_;
    return ChainMap(g.source(), tgt_, std::move(comps), per);
}

ChainMap ChainMap::add(const ChainMap& o) const {
    int lo = std::min(lo_, o.lo()), hi = std::max(hi_, o.hi());
    std::map<int, FreeMap> comps;
    for (int n = lo; n <= hi; ++n) comps.emplace(n, component(n).add(o.component(n)));
    std::optional<Periodicity> per;
    if (per_ && o.per_ && *per_ == *o.per_) per = per_;
    return ChainMap(src_, tgt_, std::move(comps), per);
}

ChainMap ChainMap::sub(const ChainMap& o) const { return add(o.negate()); }

ChainMap ChainMap::negate() const {
    std::map<int, FreeMap> comps;
    for (const auto& [n, f] : comp_) comps.emplace(n, f.negate());
    return ChainMap(src_, tgt_, std::move(comps), per_);
}

Homotopy::Homotopy(ChainComplex src, ChainComplex tgt, std::map<int, FreeMap> comps,
                   std::optional<Periodicity> per)
    : src_(std::move(src)), tgt_(std::move(tgt)), comp_(std::move(comps)), per_(std::move(per)) {
    if (comp_.empty()) {
        lo_ = 0;
        hi_ = 0;
        comp_.emplace(0, FreeMap::zero(src_.ring(), tgt_.rank(1), src_.rank(0)));
    } else {
        lo_ = comp_.begin()->first;
        hi_ = comp_.rbegin()->first;
    }
    for (int n = lo_; n <= hi_; ++n) {
        auto it = comp_.find(n);
        if (it == comp_.end())
            throw ShapeError("missing homotopy component at degree " + std::to_string(n));
        if (it->second.cols() != src_.rank(n) || it->second.rows() != tgt_.rank(n + 1))
            throw ShapeError("homotopy component shape mismatch at degree " + std::to_string(n));
    }
}

Homotopy Homotopy::zero(ChainComplex src, ChainComplex tgt) {
    std::map<int, FreeMap> comps;
    comps.emplace(0, FreeMap::zero(src.ring(), tgt.rank(1), src.rank(0)));
    return Homotopy(std::move(src), std::move(tgt), std::move(comps));
}

FreeMap Homotopy::component(int n) const {
    auto m = detail::fold_window(n, lo_, hi_, per_);
    if (m) return comp_.at(*m);
    return FreeMap::zero(src_.ring(), tgt_.rank(n + 1), src_.rank(n));
}

bool Homotopy::certifies(const ChainMap& f, const ChainMap& g, int lo, int hi) const {
    for (int n = lo; n <= hi; ++n) {
        FreeMap want = f.component(n).sub(g.component(n));
        FreeMap got =
            component(n - 1).compose(src_.diff(n)).add(tgt_.diff(n + 1).compose(component(n)));
        if (!(want == got)) return false;
    }
    return true;
}

bool Homotopy::certifies_null(const ChainMap& f, int lo, int hi) const {
    return certifies(f, ChainMap::zero(f.source(), f.target()), lo, hi);
}

}  // namespace tac
