#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "saf/errors.hpp"

namespace saf {

/// Fixed-arity set of argument indices backed by 64-bit words.
///
/// Binary set operations require both operands to have the same arity; a
/// mismatch is a ContractViolation. Ordering is lexicographic over the sorted
/// member tuple, which is the canonical order used for all printed output.
class ArgSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ArgSet() = default;
    explicit ArgSet(std::size_t arity) : arity_(arity), words_((arity + 63) / 64, 0) {}
    ArgSet(std::size_t arity, std::initializer_list<std::size_t> members) : ArgSet(arity) {
        for (auto m : members) insert(m);
    }

    static ArgSet full(std::size_t arity) {
        ArgSet s(arity);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <class Range>
    static ArgSet from_range(std::size_t arity, const Range& members) {
        ArgSet s(arity);
        for (auto m : members) s.insert(static_cast<std::size_t>(m));
        return s;
    }

    std::size_t arity() const { return arity_; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool contains(std::size_t i) const {
        return i < arity_ && ((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void insert(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    ArgSet& operator|=(const ArgSet& o) {
        check_arity(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ArgSet& operator&=(const ArgSet& o) {
        check_arity(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    ArgSet& operator-=(const ArgSet& o) {
        check_arity(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

    ArgSet with(std::size_t i) const {
        ArgSet r = *this;
        r.insert(i);
        return r;
    }
    ArgSet without(std::size_t i) const {
        ArgSet r = *this;
        r.erase(i);
        return r;
    }

    /// Complement relative to {0, ..., arity-1}.
    ArgSet complement() const {
        ArgSet r(arity_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool is_subset_of(const ArgSet& o) const {
        check_arity(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const ArgSet& o) const {
        check_arity(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    /// Smallest member, or npos.
    std::size_t first() const { return next_from(0); }

    /// Smallest member >= i, or npos.
    std::size_t next_from(std::size_t i) const {
        if (i >= arity_) return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return npos;
            w = words_[k];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = arity_ * 0x9e3779b97f4a7c15ull;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
        return h;
    }

    friend bool operator==(const ArgSet& a, const ArgSet& b) {
        return a.arity_ == b.arity_ && a.words_ == b.words_;
    }

    /// Lexicographic order of the sorted member tuples; arity breaks ties.
    friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) {
        if (a.arity_ != b.arity_) return a.arity_ <=> b.arity_;
        // The lowest element in which the sets differ decides: the set that has
        // it is smaller unless the other set has nothing left beyond it.
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            std::uint64_t diff = a.words_[k] ^ b.words_[k];
            if (!diff) continue;
            std::size_t p = (k << 6) + static_cast<std::size_t>(std::countr_zero(diff));
            bool a_has = a.contains(p);
            const ArgSet& other = a_has ? b : a;
            bool other_continues = other.next_from(p + 1) != npos;
            if (a_has) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
            return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        if (arity_ & 63) words_.back() &= (std::uint64_t{1} << (arity_ & 63)) - 1;
    }
    void check_index(std::size_t i) const {
        if (i >= arity_) throw ContractViolation("argument index out of range for set arity");
    }
    void check_arity(const ArgSet& o) const {
        if (o.arity_ != arity_) throw ContractViolation("set operation on sets of different arity");
    }

    std::size_t arity_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ArgSetHash {
    std::size_t operator()(const ArgSet& s) const { return s.hash(); }
};

}  // namespace saf

template <>
struct std::hash<saf::ArgSet> {
    std::size_t operator()(const saf::ArgSet& s) const { return s.hash(); }
};
