#pragma once

#include <map>
#include <optional>

#include "tac/presentation.hpp"

namespace tac {

// Periodic extension rule for an unbounded complex: outside the stated
// bounds the differentials repeat, d_{n+period} = d_n for every n <= below
// and for every n >= above (whichever bounds are present).
struct Periodicity {
    int period = 0;
    std::optional<int> below;
    std::optional<int> above;

    bool operator==(const Periodicity& o) const {
        return period == o.period && below == o.below && above == o.above;
    }
};

struct ComplexReport {
    bool ok = true;
    int degree = 0;
    std::string what;
};

// A chain complex of finitely generated free modules, stored as a finite
// window [lo, hi] of ranks and differentials (d_n : C_n -> C_{n-1} for
// lo < n <= hi) plus an optional periodicity record. Degrees outside the
// window are determined by the record where it applies and are zero
// otherwise, so rank() and diff() are total. Homological grading: the
// differential lowers degree.
class ChainComplex {
public:
    ChainComplex(QuotientRing ring, int lo, int hi, std::map<int, std::size_t> ranks,
                 std::map<int, FreeMap> diffs, std::optional<Periodicity> per = std::nullopt);

    static ChainComplex zero_complex(QuotientRing ring);
    // a single free module in one degree
    static ChainComplex concentrated(QuotientRing ring, int degree, std::size_t rank);

    const QuotientRing& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::optional<Periodicity>& periodicity() const { return per_; }

    std::size_t rank(int n) const;
    FreeMap diff(int n) const;
    // true when the degree is inside the window or reachable through the
    // periodic record (zero-extension degrees return false)
    bool in_core(int n) const;

    bool is_zero() const;

    // cokernel of d_1, the module the non-negative part resolves
    ModulePresentation augmentation() const;
    ChainComplex with_augmentation(ModulePresentation m) const;
    bool has_stored_augmentation() const { return aug_.has_value(); }

    // same data re-windowed to cover [lo, hi] explicitly
    ChainComplex materialize(int lo, int hi) const;
    ChainComplex drop_periodicity() const;
    ChainComplex with_periodicity(Periodicity per) const;

private:
    QuotientRing ring_;
    int lo_, hi_;
    std::map<int, std::size_t> ranks_;
    std::map<int, FreeMap> diffs_;
    std::optional<Periodicity> per_;
    std::optional<ModulePresentation> aug_;

    std::optional<int> fold(int n, bool for_rank) const;
};

// d d = 0 on every representable consecutive pair, one periodic wrap
// included, and period-shifted data agree inside the window
ComplexReport validate_complex(const ChainComplex& c);
// throwing form used by constructors of derived complexes
void ensure_valid(const ChainComplex& c, const std::string& where);

bool complexes_equal(const ChainComplex& a, const ChainComplex& b, int lo, int hi);

}  // namespace tac
