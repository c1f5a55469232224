#include "tac/complex.hpp"

#include "tac/errors.hpp"

namespace tac {

ChainComplex::ChainComplex(QuotientRing ring, int lo, int hi, std::map<int, std::size_t> ranks,
                           std::map<int, FreeMap> diffs, std::optional<Periodicity> per)
    : ring_(std::move(ring)), lo_(lo), hi_(hi), ranks_(std::move(ranks)),
      diffs_(std::move(diffs)), per_(std::move(per)) {
    if (lo_ > hi_) throw ShapeError("complex window is empty");
    for (int n = lo_; n <= hi_; ++n)
        if (!ranks_.count(n)) throw ShapeError("missing rank at degree " + std::to_string(n));
    for (int n = lo_ + 1; n <= hi_; ++n) {
        auto it = diffs_.find(n);
        if (it == diffs_.end())
            throw ShapeError("missing differential at degree " + std::to_string(n));
        const FreeMap& d = it->second;
        if (!d.ring().same_ring(ring_))
            throw RingError("differential over a different ring");
        if (d.cols() != ranks_.at(n) || d.rows() != ranks_.at(n - 1))
            throw ShapeError("differential shape mismatch at degree " + std::to_string(n));
    }
    if (per_) {
        if (per_->period < 1) throw ShapeError("period must be positive");
        if (!per_->below && !per_->above) throw ShapeError("periodicity needs a bound");
        int p = per_->period;
        if (per_->above) {
            for (int i = 1; i <= p; ++i)
                if (!fold(hi_ + i, false))
                    throw ShapeError("window too small for the periodic extension above");
        }
        if (per_->below) {
            for (int i = 1; i <= p; ++i)
                if (!fold(lo_ + 1 - i, false))
                    throw ShapeError("window too small for the periodic extension below");
        }
    }
}

ChainComplex ChainComplex::zero_complex(QuotientRing ring) {
    return ChainComplex(std::move(ring), 0, 0, {{0, 0}}, {});
}

ChainComplex ChainComplex::concentrated(QuotientRing ring, int degree, std::size_t rank) {
    return ChainComplex(std::move(ring), degree, degree, {{degree, rank}}, {});
}

std::optional<int> ChainComplex::fold(int n, bool for_rank) const {
    int wlo = for_rank ? lo_ : lo_ + 1;
    if (n >= wlo && n <= hi_) return n;
    if (!per_) return std::nullopt;
    int p = per_->period;
    if (n > hi_ && per_->above) {
        int m = n - p * ((n - hi_ + p - 1) / p);
        int bound = for_rank ? *per_->above - 1 : *per_->above;
        if (m >= wlo && m >= bound) return m;
        return std::nullopt;
    }
    if (n < wlo && per_->below) {
        int m = n + p * ((wlo - n + p - 1) / p);
        if (m <= hi_ && m <= *per_->below + p) return m;
        return std::nullopt;
    }
    return std::nullopt;
}

std::size_t ChainComplex::rank(int n) const {
    auto m = fold(n, true);
    return m ? ranks_.at(*m) : 0;
}

FreeMap ChainComplex::diff(int n) const {
    auto m = fold(n, false);
    if (m) return diffs_.at(*m);
    return FreeMap::zero(ring_, rank(n - 1), rank(n));
}

bool ChainComplex::in_core(int n) const { return fold(n, true).has_value(); }

bool ChainComplex::is_zero() const {
    if (per_) {
        for (const auto& [n, r] : ranks_)
            if (r != 0) return false;
        return true;
    }
    for (const auto& [n, r] : ranks_)
        if (r != 0) return false;
    return true;
}

ModulePresentation ChainComplex::augmentation() const {
    if (aug_) return *aug_;
    return ModulePresentation(ring_, rank(0), diff(1));
}

ChainComplex ChainComplex::with_augmentation(ModulePresentation m) const {
    ChainComplex c = *this;
    c.aug_ = std::move(m);
    return c;
}

ChainComplex ChainComplex::materialize(int lo, int hi) const {
    if (lo > hi) throw ShapeError("empty materialization window");
    int nlo = std::min(lo, lo_), nhi = std::max(hi, hi_);
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = nlo; n <= nhi; ++n) ranks[n] = rank(n);
    for (int n = nlo + 1; n <= nhi; ++n) diffs.emplace(n, diff(n));
    ChainComplex c(ring_, nlo, nhi, std::move(ranks), std::move(diffs), per_);
    c.aug_ = aug_;
    return c;
}

ChainComplex ChainComplex::drop_periodicity() const {
    ChainComplex c = *this;
    c.per_.reset();
    return c;
}

ChainComplex ChainComplex::with_periodicity(Periodicity per) const {
    ChainComplex c(ring_, lo_, hi_, ranks_, diffs_, per);
    c.aug_ = aug_;
    return c;
}

ComplexReport validate_complex(const ChainComplex& c) {
    int lo = c.lo(), hi = c.hi();
    // consecutive pairs across the window plus one wrap on each periodic side
    int from = lo + 1, to = hi;
    if (c.periodicity() && c.periodicity()->below) from = lo + 1 - c.periodicity()->period;
    if (c.periodicity() && c.periodicity()->above) to = hi + c.periodicity()->period;
    for (int n = from; n < to; ++n) {
        FreeMap a = c.diff(n), b = c.diff(n + 1);
        if (a.cols() != b.rows())
            return {false, n + 1, "rank mismatch between consecutive differentials"};
        if (!a.compose(b).is_zero())
            return {false, n + 1, "consecutive differentials do not compose to zero"};
    }
    // periodic record must agree with stored data inside the window
    if (c.periodicity()) {
        int p = c.periodicity()->period;
        if (c.periodicity()->above) {
            for (int n = *c.periodicity()->above; n + p <= hi; ++n)
                if (!(c.diff(n) == c.diff(n + p)))
                    return {false, n + p, "stored differential contradicts the period"};
        }
        if (c.periodicity()->below) {
            for (int n = lo + 1; n + p <= std::min(hi, *c.periodicity()->below + p); ++n)
                if (!(c.diff(n) == c.diff(n + p)))
                    return {false, n, "stored differential contradicts the period"};
        }
    }
    return {true, 0, ""};
}

void ensure_valid(const ChainComplex& c, const std::string& where) {
    ComplexReport r = validate_complex(c);
    if (!r.ok)
        throw Error(where + ": invalid complex at degree " + std::to_string(r.degree) + ": " +
                    r.what);
}

bool complexes_equal(const ChainComplex& a, const ChainComplex& b, int lo, int hi) {
    if (!a.ring().same_ring(b.ring())) return false;
    for (int n = lo; n <= hi; ++n) {
        if (a.rank(n) != b.rank(n)) return false;
        if (n > lo && !(a.diff(n) == b.diff(n))) return false;
    }
    return true;
}

}  // namespace tac
