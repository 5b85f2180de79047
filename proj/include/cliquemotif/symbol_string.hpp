#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cliquemotif {

// Symbols are dense integer ids 0..A-1 for the owning instance's alphabet.
using Symbol = std::uint16_t;

namespace detail {

// 64 bits starting at bit position `pos`; bits past the end read as 0.
inline std::uint64_t read_bits64(const std::uint64_t* words, std::size_t nwords,
                                 std::size_t pos) {
    const std::size_t w = pos >> 6;
    const unsigned s = static_cast<unsigned>(pos & 63);
    const std::uint64_t lo = w < nwords ? words[w] : 0;
    if (s == 0) return lo;
    const std::uint64_t hi = w + 1 < nwords ? words[w + 1] : 0;
    return (lo >> s) | (hi << (64 - s));
}

}  // namespace detail

// Immutable string of symbol ids. Content over {0,1} is stored bit-packed
// (one machine word per 64 symbols); anything wider keeps one cell per
// symbol. The representation is a function of the content, so equality can
// compare storage directly.
class SymbolString {
public:
    SymbolString() = default;

    explicit SymbolString(const std::vector<Symbol>& symbols) { assign(symbols); }

    SymbolString(std::initializer_list<Symbol> symbols) {
        assign(std::vector<Symbol>(symbols));
    }

    static SymbolString zeros(std::size_t len) {
        SymbolString s;
        s.len_ = len;
        s.words_.assign((len + 63) / 64, 0);
        return s;
    }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    // True when the content is binary and stored bit-packed.
    bool packed() const noexcept { return packed_; }

    Symbol operator[](std::size_t i) const {
        return packed_ ? static_cast<Symbol>((words_[i >> 6] >> (i & 63)) & 1)
                       : wide_[i];
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    std::vector<Symbol> to_symbols() const {
        std::vector<Symbol> out(len_);
        for (std::size_t i = 0; i < len_; ++i) out[i] = (*this)[i];
        return out;
    }

    SymbolString substr(std::size_t pos, std::size_t len) const {
        if (pos + len > len_) throw std::out_of_range("SymbolString::substr");
        std::vector<Symbol> out(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = (*this)[pos + i];
        return SymbolString(out);
    }

    friend bool operator==(const SymbolString& a, const SymbolString& b) {
        if (a.len_ != b.len_ || a.packed_ != b.packed_) return false;
        return a.packed_ ? a.words_ == b.words_ : a.wide_ == b.wide_;
    }

    friend bool operator!=(const SymbolString& a, const SymbolString& b) {
        return !(a == b);
    }

private:
    void assign(const std::vector<Symbol>& symbols) {
        len_ = symbols.size();
        bool binary = true;
        for (Symbol s : symbols) {
            if (s > 1) {
                binary = false;
                break;
            }
        }
        if (binary) {
            packed_ = true;
            wide_.clear();
            words_.assign((len_ + 63) / 64, 0);
            for (std::size_t i = 0; i < len_; ++i)
                if (symbols[i]) words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        } else {
            packed_ = false;
            words_.clear();
            wide_ = symbols;
        }
    }

    std::size_t len_ = 0;
    bool packed_ = true;
    std::vector<Symbol> wide_;
    std::vector<std::uint64_t> words_;
};

// Hamming distance between equal-length windows a[off_a..off_a+len) and
// b[off_b..off_b+len). Packed operands go through word XOR + popcount.
inline std::size_t hamming(const SymbolString& a, std::size_t off_a,
                           const SymbolString& b, std::size_t off_b,
                           std::size_t len) {
    if (off_a + len > a.size() || off_b + len > b.size())
        throw std::out_of_range("hamming: window out of range");
    if (len == 0) return 0;
    if (a.packed() && b.packed()) {
        const std::uint64_t* wa = a.words().data();
        const std::uint64_t* wb = b.words().data();
        const std::size_t na = a.words().size();
        const std::size_t nb = b.words().size();
        std::size_t dist = 0;
        std::size_t done = 0;
        while (done < len) {
            const std::size_t take = std::min<std::size_t>(64, len - done);
            std::uint64_t x = detail::read_bits64(wa, na, off_a + done) ^
                              detail::read_bits64(wb, nb, off_b + done);
            if (take < 64) x &= (std::uint64_t(1) << take) - 1;
            dist += static_cast<std::size_t>(std::popcount(x));
            done += take;
        }
        return dist;
    }
    std::size_t dist = 0;
    for (std::size_t i = 0; i < len; ++i) dist += a[off_a + i] != b[off_b + i];
    return dist;
}

inline std::size_t hamming(const SymbolString& a, const SymbolString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming: length mismatch");
    return hamming(a, 0, b, 0, a.size());
}

}  // namespace cliquemotif
