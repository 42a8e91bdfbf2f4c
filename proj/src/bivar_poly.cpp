#include "llab/bivar_poly.hpp"

#include <algorithm>
#include <vector>

namespace llab {

BivarPoly BivarPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(long i, long j, const Rat& c) {
    BivarPoly p;
    p.add_term(i, j, c);
    return p;
}

long BivarPoly::total_degree() const {
    long deg = -1;
    for (const auto& [key, _] : terms_) deg = std::max(deg, key.first + key.second);
    return deg;
}

Rat BivarPoly::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat() : it->second;
}

void BivarPoly::add_term(long i, long j, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivarPoly BivarPoly::scaled(const Rat& c) const {
    BivarPoly out;
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
    return out;
}

Rat BivarPoly::evaluate(const Rat& s, const Rat& t) const {
    Rat acc;
    for (const auto& [key, c] : terms_)
        acc += c * Rat::pow(s, static_cast<unsigned long>(key.first)) *
               Rat::pow(t, static_cast<unsigned long>(key.second));
    return acc;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        const auto [i, j] = key;
        std::string term;
        Rat a = Rat::abs(c);
        bool unit = a == Rat(1) && (i > 0 || j > 0);
        if (!unit) term += a.to_string();
        if (i > 0) {
            if (!term.empty()) term += "*";
            term += i == 1 ? "s" : "s^" + std::to_string(i);
        }
        if (j > 0) {
            if (!term.empty()) term += "*";
            term += j == 1 ? "t" : "t^" + std::to_string(j);
        }
        if (out.empty())
            out = (c.sgn() < 0 ? "-" : "") + term;
        else
            out += (c.sgn() < 0 ? " - " : " + ") + term;
    }
    return out;
}

BivarPoly binom_poly(BinomVar var, long shift, long k) {
    if (k < 0) throw input_error("binom_poly needs k >= 0");
    BivarPoly v;
    if (var == BinomVar::s || var == BinomVar::st) v.add_term(1, 0, Rat(1));
    if (var == BinomVar::t || var == BinomVar::st) v.add_term(0, 1, Rat(1));
    BivarPoly out = BivarPoly::constant(Rat(1));
    Rat kfact(1);
    for (long i = 0; i < k; ++i) {
        BivarPoly factor = v;
        factor.add_term(0, 0, Rat(shift - i));
        out = out * factor;
        kfact *= Rat(i + 1);
    }
    return out.scaled(Rat(1) / kfact);
}

BivarPoly interpolate_grid(const std::map<std::pair<long, long>, Rat>& values,
                           long degree_bound) {
    if (degree_bound < 0) throw input_error("negative degree bound");
    const long B = degree_bound;
    std::vector<std::vector<Rat>> table(B + 1, std::vector<Rat>(B + 1));
    for (long s = 0; s <= B; ++s)
        for (long t = 0; t <= B; ++t) {
            auto it = values.find({s, t});
            if (it == values.end())
                throw input_error("interpolation grid missing point (" +
                                  std::to_string(s) + "," + std::to_string(t) + ")");
            table[s][t] = it->second;
        }
    // Forward differences in s, then in t: table[i][j] becomes the Newton
    // coefficient of binom(s,i)*binom(t,j).
    for (long i = 1; i <= B; ++i)
        for (long s = B; s >= i; --s)
            for (long t = 0; t <= B; ++t)
                table[s][t] -= table[s - 1][t];
    for (long j = 1; j <= B; ++j)
        for (long t = B; t >= j; --t)
            for (long s = 0; s <= B; ++s)
                table[s][t] -= table[s][t - 1];
    BivarPoly result;
    for (long i = 0; i <= B; ++i)
        for (long j = 0; j <= B; ++j) {
            if (table[i][j].is_zero()) continue;
            if (i + j > B)
                throw input_error(
                    "interpolation failure: nonzero finite difference of order (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    ") exceeds the degree bound (grid not polynomial of that degree)");
            result += (binom_poly(BinomVar::s, 0, i) * binom_poly(BinomVar::t, 0, j))
                          .scaled(table[i][j]);
        }
    for (const auto& [pt, value] : values)
        if (result.evaluate(Rat(pt.first), Rat(pt.second)) != value)
            throw input_error("interpolation failure: grid value at (" +
                              std::to_string(pt.first) + "," + std::to_string(pt.second) +
                              ") departs from the interpolant (grid starts below the "
                              "stabilization range)");
    return result;
}

} // namespace llab
