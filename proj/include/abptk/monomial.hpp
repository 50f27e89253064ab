#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace abptk {

/// Exponent vector of a monomial in x0..x{n-1}.
struct Monomial {
    std::vector<std::uint32_t> exps;

    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps[var] = e;
        return m;
    }

    std::size_t num_vars() const { return exps.size(); }
    std::uint64_t degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Graded lexicographic order with x0 > x1 > ... . Total and deterministic;
/// fixed globally so serialization and equality are canonical.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    return 0;
}

/// Comparator putting the grlex-largest monomial first (canonical print order).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

}  // namespace abptk
