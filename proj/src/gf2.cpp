#include "sc3d/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc3d {

bool Gf2Basis::insert(BitVec v) {
    if (v.size() != n_) throw std::invalid_argument("Gf2Basis: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    std::size_t p = v.first_set();
    if (p == BitVec::npos) return false;
    // keep reduced form: clear bit p from every existing row
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i] ^= v;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

BitVec Gf2Basis::reduce(BitVec v) const {
    if (v.size() != n_) throw std::invalid_argument("Gf2Basis: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

Gf2Basis gf2_span(const std::vector<BitVec>& rows, std::size_t n) {
    Gf2Basis b(n);
    for (const auto& r : rows) b.insert(r);
    return b;
}

std::size_t gf2_rank(const std::vector<BitVec>& rows) {
    if (rows.empty()) return 0;
    return gf2_span(rows, rows.front().size()).rank();
}

bool in_rowspan(const BitVec& v, const std::vector<BitVec>& rows) {
    Gf2Basis b(v.size());
    for (const auto& r : rows) {
        if (r.size() != v.size()) throw std::invalid_argument("in_rowspan: length mismatch");
        b.insert(r);
    }
    return b.contains(v);
}

std::vector<std::size_t> independent_rows(const std::vector<BitVec>& rows, std::size_t n) {
    Gf2Basis b(n);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (b.insert(rows[i])) out.push_back(i);
    return out;
}

std::optional<std::vector<std::uint8_t>> gf2_solve(const std::vector<BitVec>& rows,
                                                   const BitVec& target) {
    std::size_t n = target.size();
    std::size_t m = rows.size();
    // eliminate with bookkeeping of which input rows feed each reduced row
    std::vector<BitVec> red;
    std::vector<BitVec> combo;  // over m coordinates
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < m; ++i) {
        BitVec v = rows[i];
        BitVec c(m);
        c.set(i);
        for (std::size_t j = 0; j < red.size(); ++j)
            if (v.get(piv[j])) {
                v ^= red[j];
                c ^= combo[j];
            }
        std::size_t p = v.first_set();
        if (p == BitVec::npos) continue;
        red.push_back(std::move(v));
        combo.push_back(std::move(c));
        piv.push_back(p);
    }
    BitVec v = target;
    BitVec c(m);
    for (std::size_t j = 0; j < red.size(); ++j)
        if (v.get(piv[j])) {
            v ^= red[j];
            c ^= combo[j];
        }
    if (v.any()) return std::nullopt;
    std::vector<std::uint8_t> out(m, 0);
    for (std::size_t i = 0; i < m; ++i) out[i] = c.get(i) ? 1 : 0;
    (void)n;
    return out;
}

std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& rows, std::size_t n) {
    Gf2Basis b = gf2_span(rows, n);
    const auto& r = b.rows();
    const auto& piv = b.pivots();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<BitVec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        BitVec v(n);
        v.set(f);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i].get(f)) v.set(piv[i]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace sc3d
