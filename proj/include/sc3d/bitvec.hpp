#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc3d {

// Packed GF(2) vector of fixed length. Bit i is qubit i; bit 0 is the least
// significant bit of word 0, which is also how the hex serialization reads.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    template <typename It>
    static BitVec from_indices(std::size_t n, It first, It last) {
        BitVec v(n);
        for (; first != last; ++first) v.set(static_cast<std::size_t>(*first));
        return v;
    }
    static BitVec from_indices(std::size_t n, std::initializer_list<std::size_t> idx) {
        return from_indices(n, idx.begin(), idx.end());
    }
    static BitVec from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
        return from_indices(n, idx.begin(), idx.end());
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        assert(i < n_);
        if (v)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    BitVec& operator^=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec&) const = default;

    // Numeric order (most significant word first); used only as a stable sort key.
    bool operator<(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool parity() const { return popcount() & 1u; }

    // Lowest set index, or npos when empty.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return npos;
    }

    static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
        assert(a.n_ == b.n_);
        std::size_t c = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] & b.w_[k]);
        return c;
    }
    static bool overlap_parity(const BitVec& a, const BitVec& b) {
        return and_popcount(a, b) & 1u;
    }
    static bool and3_parity(const BitVec& a, const BitVec& b, const BitVec& c) {
        assert(a.n_ == b.n_ && b.n_ == c.n_);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k] & c.w_[k];
        return std::popcount(acc) & 1u;
    }
    static BitVec and_of(const BitVec& a, const BitVec& b) {
        assert(a.n_ == b.n_);
        BitVec r(a.n_);
        for (std::size_t k = 0; k < a.w_.size(); ++k) r.w_[k] = a.w_[k] & b.w_[k];
        return r;
    }
    bool intersects(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    // true iff support(*this) is a subset of support(o)
    bool subset_of(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(popcount());
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                out.push_back(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    // Fixed-width hex, bit 0 = least significant bit of the value.
    std::string to_hex() const {
        std::size_t digits = (n_ + 3) / 4;
        std::string s(digits, '0');
        static const char* hexc = "0123456789abcdef";
        for (std::size_t d = 0; d < digits; ++d) {
            std::size_t bit = d * 4;  // nibbles never straddle a 64-bit word
            unsigned nib = static_cast<unsigned>((w_[bit >> 6] >> (bit & 63)) & 0xf);
            s[digits - 1 - d] = hexc[nib];
        }
        return s;
    }
    static BitVec from_hex(std::size_t n, const std::string& s) {
        std::size_t digits = (n + 3) / 4;
        if (s.size() != digits) throw std::invalid_argument("hex string width mismatch");
        BitVec v(n);
        for (std::size_t d = 0; d < digits; ++d) {
            char c = s[digits - 1 - d];
            unsigned nib;
            if (c >= '0' && c <= '9')
                nib = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                nib = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                nib = static_cast<unsigned>(c - 'A' + 10);
            else
                throw std::invalid_argument("bad hex digit");
            for (unsigned b = 0; b < 4; ++b)
                if ((nib >> b) & 1u) {
                    std::size_t i = d * 4 + b;
                    if (i >= n) throw std::invalid_argument("hex sets bit beyond length");
                    v.set(i);
                }
        }
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace sc3d
