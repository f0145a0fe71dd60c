#include "suboplex/partial_function.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>

namespace suboplex {

namespace {

char value_char(int v) {
    return v < 10 ? char('0' + v) : char('a' + (v - 10));
}

int char_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    return -2;
}

} // namespace

PartialFunction::PartialFunction(int n, int m)
    : n_(n), m_(m), vals_(static_cast<std::size_t>(n), kUndef) {
    if (n < 0 || m < 1) throw shape_error("PartialFunction: need n >= 0, m >= 1");
}

PartialFunction::PartialFunction(std::vector<std::int8_t> values, int m)
    : n_(static_cast<int>(values.size())), m_(m), vals_(std::move(values)) {
    if (m < 1) throw shape_error("PartialFunction: need m >= 1");
    check_values();
}

void PartialFunction::check_values() const {
    for (std::int8_t v : vals_)
        if (v != kUndef && (v < 0 || v >= m_))
            throw shape_error("PartialFunction: value out of range for codomain " + std::to_string(m_));
}

PartialFunction PartialFunction::from_string(const std::string& dots, int m) {
    std::vector<std::int8_t> vals;
    vals.reserve(dots.size());
    for (char c : dots) {
        if (c == '.') {
            vals.push_back(kUndef);
        } else {
            int v = char_value(c);
            if (v < 0 || v >= m)
                throw shape_error(std::string("bad dot-string character '") + c + "' for codomain " + std::to_string(m));
            vals.push_back(static_cast<std::int8_t>(v));
        }
    }
    return PartialFunction(std::move(vals), m);
}

PartialFunction PartialFunction::point(int n, int m, int u, int v) {
    PartialFunction pf(n, m);
    if (u < 0 || u >= n || v < 0 || v >= m) throw shape_error("PartialFunction::point out of range");
    pf.vals_[u] = static_cast<std::int8_t>(v);
    return pf;
}

int PartialFunction::dom_size() const {
    int k = 0;
    for (std::int8_t v : vals_) k += (v != kUndef);
    return k;
}

std::vector<int> PartialFunction::domain() const {
    std::vector<int> d;
    for (int u = 0; u < n_; ++u)
        if (vals_[u] != kUndef) d.push_back(u);
    return d;
}

PartialFunction PartialFunction::meet(const PartialFunction& other) const {
    if (n_ != other.n_ || m_ != other.m_) throw shape_error("pf_meet: mismatched (n, m)");
    PartialFunction out(n_, m_);
    for (int u = 0; u < n_; ++u)
        if (vals_[u] != kUndef && vals_[u] == other.vals_[u]) out.vals_[u] = vals_[u];
    return out;
}

bool PartialFunction::extends(const PartialFunction& pf) const {
    if (n_ != pf.n_ || m_ != pf.m_) throw shape_error("pf_extends: mismatched (n, m)");
    for (int u = 0; u < n_; ++u)
        if (pf.vals_[u] != kUndef && vals_[u] != pf.vals_[u]) return false;
    return true;
}

PartialFunction PartialFunction::with(int u, int v) const {
    PartialFunction out = *this;
    if (v < 0 || v >= m_) throw shape_error("PartialFunction::with value out of range");
    out.vals_[u] = static_cast<std::int8_t>(v);
    return out;
}

PartialFunction PartialFunction::without(int u) const {
    PartialFunction out = *this;
    out.vals_[u] = kUndef;
    return out;
}

PartialFunction PartialFunction::restrict_to(const std::vector<int>& keep) const {
    std::vector<bool> in(static_cast<std::size_t>(n_), false);
    for (int u : keep) in[u] = true;
    PartialFunction out = *this;
    for (int u = 0; u < n_; ++u)
        if (!in[u]) out.vals_[u] = kUndef;
    return out;
}

PartialFunction PartialFunction::project_to(const std::vector<int>& keep) const {
    std::vector<std::int8_t> vals;
    vals.reserve(keep.size());
    for (int u : keep) vals.push_back(vals_[u]);
    return PartialFunction(std::move(vals), m_);
}

PartialFunction PartialFunction::minus(const PartialFunction& base) const {
    if (!extends(base)) throw shape_error("PartialFunction::minus: not an extension of the base");
    std::vector<std::int8_t> vals;
    vals.reserve(vals_.size());
    for (int u = 0; u < n_; ++u)
        if (!base.defined(u)) vals.push_back(vals_[u]);
    return PartialFunction(std::move(vals), m_);
}

PartialFunction PartialFunction::embed(int ambient_n, const std::vector<int>& positions) const {
    if (static_cast<int>(positions.size()) != n_)
        throw shape_error("PartialFunction::embed: positions size mismatch");
    PartialFunction out(ambient_n, m_);
    for (int u = 0; u < n_; ++u) out.vals_[positions[u]] = vals_[u];
    return out;
}

std::string PartialFunction::to_string() const {
    std::string s;
    s.reserve(vals_.size());
    for (std::int8_t v : vals_) s.push_back(v == kUndef ? '.' : value_char(v));
    return s;
}

std::uint64_t PartialFunction::graph_bits() const {
    if (n_ * m_ > 64) throw size_limit_error("graph_bits: n*m > 64");
    std::uint64_t bits = 0;
    for (int u = 0; u < n_; ++u)
        if (vals_[u] != kUndef) bits |= std::uint64_t(1) << (u * m_ + vals_[u]);
    return bits;
}

std::uint64_t PartialFunction::gamma_bits() const {
    std::uint64_t full = (n_ * m_ == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << (n_ * m_)) - 1);
    return full & ~graph_bits();
}

bool PartialFunction::operator<(const PartialFunction& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (m_ != o.m_) return m_ < o.m_;
    return vals_ < o.vals_;
}

std::size_t PartialFunctionHash::operator()(const PartialFunction& pf) const {
    std::size_t h = std::hash<int>()(pf.n() * 64 + pf.m());
    for (std::int8_t v : pf.values()) h = h * 1099511628211ULL + static_cast<std::size_t>(v + 2);
    return h;
}

} // namespace suboplex
