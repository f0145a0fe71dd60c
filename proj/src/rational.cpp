#include "suboplex/rational.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>

namespace suboplex {

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw shape_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw shape_error("malformed rational: " + s);
    }
}

std::string rational_to_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

int rat_rref(RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rat_rank(RatMatrix m) { return rat_rref(m); }

std::vector<Rat> rat_solve(RatMatrix a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    if (rows == 0) return {};
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    rat_rref(a);
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t lead = 0;
        while (lead < cols && a[i][lead] == 0) ++lead;
        if (lead == cols) {
            if (a[i][cols] != 0) return {}; // inconsistent
            continue;
        }
        x[lead] = a[i][cols];
    }
    return x;
}

} // namespace suboplex
