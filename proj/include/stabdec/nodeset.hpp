#ifndef STABDEC_NODESET_HPP
#define STABDEC_NODESET_HPP

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stabdec {

// Set of node ids as a dynamic bitset. Graphs here are small (one machine
// word covers everything but record graphs), so the storage is a small-vector
// of words with the first word inline.
class NodeSet {
  public:
    NodeSet() = default;

    static NodeSet single(int v) {
        NodeSet s;
        s.set(v);
        return s;
    }
    static NodeSet full(int n) {
        NodeSet s;
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    static NodeSet of(std::initializer_list<int> vs) {
        NodeSet s;
        for (int v : vs) s.set(v);
        return s;
    }
    static NodeSet from_mask(std::uint64_t mask) {
        NodeSet s;
        if (mask) s.words_.push_back(mask);
        return s;
    }

    bool test(int v) const {
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w >= words_.size()) return false;
        return (words_[w] >> (v & 63)) & 1u;
    }
    void set(int v) {
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w < words_.size()) {
            words_[w] &= ~(std::uint64_t(1) << (v & 63));
            trim();
        }
    }

    bool empty() const { return words_.empty(); }
    bool any() const { return !words_.empty(); }
    int count() const;
    int lowest() const;   // -1 when empty
    int highest() const;  // -1 when empty

    NodeSet& operator|=(const NodeSet& o);
    NodeSet& operator&=(const NodeSet& o);
    NodeSet& operator-=(const NodeSet& o);
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    bool intersects(const NodeSet& o) const;
    bool is_subset_of(const NodeSet& o) const;
    bool operator==(const NodeSet& o) const { return words_ == o.words_; }

    // Total order by numeric value of the mask (node 0 is the lowest bit).
    // Stable-set enumeration and witness tie-breaking use this order.
    std::strong_ordering operator<=>(const NodeSet& o) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }
    std::vector<int> to_vector() const;
    std::string to_string() const;  // "{1,4,7}"

  private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }
    boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace stabdec

#endif
