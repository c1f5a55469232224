#include "tac/ring.hpp"

#include <algorithm>
#include <optional>

#include "tac/errors.hpp"
#include "tac/groebner.hpp"

namespace tac {

struct QuotientRing::Data {
    PrimeField field;
    std::vector<std::string> vars;
    std::vector<Polynomial> gens;

    // write-once caches
    mutable std::shared_ptr<ModuleGB> igb;
    mutable std::optional<std::vector<Polynomial>> basis;
    mutable std::optional<bool> proper, artinian, ci;

    Data(PrimeField f, std::vector<std::string> v, std::vector<Polynomial> g)
        : field(f), vars(std::move(v)), gens(std::move(g)) {}

    const ModuleGB& ideal_gb() const {
        if (!igb) {
            std::vector<VecPoly> rows;
            for (const auto& g : gens) rows.push_back({g});
            igb = std::make_shared<ModuleGB>(QuotientRing::polynomial_ring(field, vars), 1,
                                             std::move(rows));
        }
        return *igb;
    }
};

QuotientRing::QuotientRing(PrimeField field, std::vector<std::string> vars,
                           std::vector<Polynomial> ideal_gens) {
    for (const auto& g : ideal_gens)
        if (!g.is_zero() && g.leading_monomial().nvars() != vars.size())
            throw RingError("ideal generator has the wrong number of variables");
    std::vector<Polynomial> gens;
    for (auto& g : ideal_gens)
        if (!g.is_zero()) gens.push_back(std::move(g));
    d_ = std::make_shared<Data>(field, std::move(vars), std::move(gens));
}

QuotientRing QuotientRing::polynomial_ring(PrimeField field, std::vector<std::string> vars) {
    return QuotientRing(field, std::move(vars), {});
}

QuotientRing QuotientRing::ambient() const {
    return QuotientRing(d_->field, d_->vars, {});
}

QuotientRing QuotientRing::quotient_by(std::vector<Polynomial> extra) const {
    std::vector<Polynomial> gens = d_->gens;
    for (auto& g : extra) gens.push_back(std::move(g));
    return QuotientRing(d_->field, d_->vars, std::move(gens));
}

const PrimeField& QuotientRing::field() const { return d_->field; }
std::size_t QuotientRing::nvars() const { return d_->vars.size(); }
const std::vector<std::string>& QuotientRing::vars() const { return d_->vars; }
const std::vector<Polynomial>& QuotientRing::ideal_gens() const { return d_->gens; }

const std::vector<Polynomial>& QuotientRing::ideal_basis() const {
    if (!d_->basis) {
        std::vector<Polynomial> out;
        if (!d_->gens.empty())
            for (const auto& v : d_->ideal_gb().basis()) out.push_back(v[0]);
        d_->basis = std::move(out);
    }
    return *d_->basis;
}

Polynomial QuotientRing::nf(const Polynomial& p) const {
    if (d_->gens.empty()) return p;
    return d_->ideal_gb().nf({p})[0];
}

bool QuotientRing::is_zero_mod(const Polynomial& p) const { return nf(p).is_zero(); }

bool QuotientRing::is_unit(const Polynomial& p) const {
    if (is_zero_mod(p)) return false;
    std::vector<VecPoly> gens = {{p}};
    for (const auto& g : d_->gens) gens.push_back({g});
    ModuleGB gb(ambient(), 1, std::move(gens));
    Polynomial one = Polynomial::constant(d_->field, 1, nvars());
    return gb.contains({one});
}

Polynomial QuotientRing::unit_inverse(const Polynomial& p) const {
    std::vector<VecPoly> gens = {{p}};
    for (const auto& g : d_->gens) gens.push_back({g});
    ModuleGB gb(ambient(), 1, std::move(gens));
    Polynomial one = Polynomial::constant(d_->field, 1, nvars());
    auto w = gb.witness({one});
    if (!w) throw Error("inverse of a non-unit requested");
    return nf((*w)[0]);
}

bool QuotientRing::is_ambient_poly_ring() const { return d_->gens.empty(); }

bool QuotientRing::is_proper() const {
    if (d_->gens.empty()) return true;
    if (!d_->proper) {
        bool unit_free = true;
        for (const auto& b : ideal_basis())
            if (!b.is_zero() && b.leading_monomial().is_one()) unit_free = false;
        d_->proper = unit_free;
    }
    return *d_->proper;
}

bool QuotientRing::is_hypersurface() const {
    return is_proper() && !d_->gens.empty() && ideal_basis().size() == 1;
}

bool QuotientRing::is_artinian() const {
    if (!is_proper() || d_->gens.empty()) return false;
    if (!d_->artinian) {
        bool all = true;
        for (std::size_t i = 0; i < nvars() && all; ++i) {
            bool pure = false;
            for (const auto& b : ideal_basis()) {
                const Monomial& m = b.leading_monomial();
                bool only_i = m[i] > 0;
                for (std::size_t j = 0; j < nvars() && only_i; ++j)
                    if (j != i && m[j] > 0) only_i = false;
                if (only_i) {
                    pure = true;
                    break;
                }
            }
            all = pure;
        }
        d_->artinian = all;
    }
    return *d_->artinian;
}

bool QuotientRing::is_complete_intersection() const {
    if (d_->gens.empty()) return true;
    if (!is_proper()) return false;
    if (!d_->ci) {
        bool ok = true;
        for (std::size_t i = 0; i < d_->gens.size() && ok; ++i) {
            // colon test: ((f_0..f_{i-1}) : f_i) must stay inside (f_0..f_{i-1})
            std::vector<Polynomial> prev(d_->gens.begin(), d_->gens.begin() + i);
            QuotientRing mod_prev(d_->field, d_->vars, prev);
            std::vector<VecPoly> joint = {{d_->gens[i]}};
            for (const auto& f : prev) joint.push_back({f});
            ModuleGB gb(ambient(), 1, joint);
            for (const auto& syz : gb.syzygies()) {
                if (!mod_prev.is_zero_mod(syz[0])) {
                    ok = false;
                    break;
                }
            }
        }
        d_->ci = ok;
    }
    return *d_->ci;
}

Polynomial QuotientRing::parse(const std::string& text, int line, int col0) const {
    return parse_polynomial(d_->field, text, d_->vars, line, col0);
}

std::string QuotientRing::print(const Polynomial& p) const {
    return print_polynomial(d_->field, p, d_->vars);
}

bool QuotientRing::same_ring(const QuotientRing& o) const {
    if (d_ == o.d_) return true;
    return d_->field == o.d_->field && d_->vars == o.d_->vars && d_->gens == o.d_->gens;
}

std::string QuotientRing::describe() const {
    std::string s = "F" + std::to_string(d_->field.characteristic()) + "[";
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
        if (i) s += ",";
        s += d_->vars[i];
    }
    s += "]";
    if (!d_->gens.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < d_->gens.size(); ++i) {
            if (i) s += ", ";
            s += print(d_->gens[i]);
        }
        s += ")";
    }
    return s;
}

RingMap::RingMap(QuotientRing q, QuotientRing r) : src(std::move(q)), tgt(std::move(r)) {
    if (src.field() != tgt.field() || src.vars() != tgt.vars())
        throw RingError("ring map endpoints live over different ambient rings");
    const auto& a = src.ideal_gens();
    const auto& b = tgt.ideal_gens();
    if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin()))
        throw RingError("target ring is not presented as a quotient of the source ring");
    extra.assign(b.begin() + a.size(), b.end());
}

RingMap::RingMap(QuotientRing q, std::vector<Polynomial> extra_gens)
    : src(q), tgt(q.quotient_by(extra_gens)), extra(std::move(extra_gens)) {}

}  // namespace tac
