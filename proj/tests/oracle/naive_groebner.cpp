#include "naive_groebner.hpp"

#include <algorithm>
#include <deque>

#include "tac/errors.hpp"

namespace oracle {

using namespace tac;

int mterm_compare(const MTerm& a, const MTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return Monomial::compare(a.m, b.m);
}

bool is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

MTerm leading_mterm(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            return MTerm{i, v[i].leading_coeff(), v[i].leading_monomial()};
        }
    }
    throw Error("leading term of the zero vector");
}

Vec vec_sub(const PrimeField& k, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(k, a[i], b[i]);
    return r;
}

Vec vec_scale_term(const PrimeField& k, const Vec& v, const Term& t) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = mul_term(k, v[i], t);
    return r;
}

Vec vec_monic(const PrimeField& k, const Vec& v) {
    Coeff c = k.inv(leading_mterm(v).c);
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = scale(k, v[i], c);
    return r;
}

Vec reduce(const PrimeField& k, Vec v, const std::vector<Vec>& basis) {
    Vec rem(v.size());
    while (!is_zero(v)) {
        MTerm lt = leading_mterm(v);
        bool hit = false;
        for (const auto& g : basis) {
            if (is_zero(g)) continue;
            MTerm lg = leading_mterm(g);
            if (lg.comp == lt.comp && lg.m.divides(lt.m)) {
                Term q{k.div(lt.c, lg.c), lt.m.div(lg.m)};
                v = vec_sub(k, v, vec_scale_term(k, g, q));
                hit = true;
                break;
            }
        }
        if (!hit) {
            // move the leading term into the remainder
            rem[lt.comp] = add(k, rem[lt.comp], Polynomial::term(lt.c, lt.m));
            v[lt.comp] = sub(k, v[lt.comp], Polynomial::term(lt.c, lt.m));
        }
    }
    return rem;
}

std::vector<Vec> buchberger(const PrimeField& k, const std::vector<Vec>& gens) {
    std::vector<Vec> g;
    for (const auto& v : gens)
        if (!is_zero(v)) g.push_back(v);
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        MTerm a = leading_mterm(g[i]);
        MTerm b = leading_mterm(g[j]);
        if (a.comp != b.comp) continue;
        Monomial l = a.m.lcm(b.m);
        Vec s = vec_sub(k, vec_scale_term(k, g[i], Term{k.inv(a.c), l.div(a.m)}),
                        vec_scale_term(k, g[j], Term{k.inv(b.c), l.div(b.m)}));
        Vec r = reduce(k, s, g);
        if (!is_zero(r)) {
            g.push_back(r);
            for (std::size_t t = 0; t + 1 < g.size(); ++t) pairs.emplace_back(t, g.size() - 1);
        }
    }
    return g;
}

std::vector<Vec> reduced_basis(const PrimeField& k, std::vector<Vec> gb) {
    for (auto& v : gb) v = vec_monic(k, v);
    // minimal: walk ascending by leading term, drop anything a kept lead divides
    std::sort(gb.begin(), gb.end(), [](const Vec& a, const Vec& b) {
        return mterm_compare(leading_mterm(a), leading_mterm(b)) < 0;
    });
    std::vector<Vec> kept;
    for (const auto& v : gb) {
        MTerm lv = leading_mterm(v);
        bool divisible = false;
        for (const auto& h : kept) {
            MTerm lh = leading_mterm(h);
            if (lh.comp == lv.comp && lh.m.divides(lv.m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(v);
    }
    // interreduce tails
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = reduce(k, kept[i], others);
    }
    std::sort(kept.begin(), kept.end(), [](const Vec& a, const Vec& b) {
        return mterm_compare(leading_mterm(a), leading_mterm(b)) > 0;
    });
    return kept;
}

std::vector<Vec> reduced_groebner(const PrimeField& k, const std::vector<Vec>& gens) {
    return reduced_basis(k, buchberger(k, gens));
}

}  // namespace oracle
