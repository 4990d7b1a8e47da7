#include "stabdec/nodeset.hpp"

#include <algorithm>
#include <sstream>

namespace stabdec {

int NodeSet::count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

int NodeSet::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words_[w]);
    return -1;
}

int NodeSet::highest() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return static_cast<int>(w * 64) + 63 - __builtin_clzll(words_[w]);
    return -1;
}

NodeSet& NodeSet::operator|=(const NodeSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t w = 0; w < o.words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    trim();
    return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& o) {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < n; ++w) words_[w] &= ~o.words_[w];
    trim();
    return *this;
}

bool NodeSet::intersects(const NodeSet& o) const {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        if (words_[w] & o.words_[w]) return true;
    return false;
}

bool NodeSet::is_subset_of(const NodeSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t other = w < o.words_.size() ? o.words_[w] : 0;
        if (words_[w] & ~other) return false;
    }
    return true;
}

std::strong_ordering NodeSet::operator<=>(const NodeSet& o) const {
    std::size_t n = std::max(words_.size(), o.words_.size());
    for (std::size_t w = n; w-- > 0;) {
        std::uint64_t a = w < words_.size() ? words_[w] : 0;
        std::uint64_t b = w < o.words_.size() ? o.words_[w] : 0;
        if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<int> NodeSet::to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::string NodeSet::to_string() const {
    std::ostringstream ss;
    ss << '{';
    bool first = true;
    for_each([&](int v) {
        if (!first) ss << ',';
        ss << v;
        first = false;
    });
    ss << '}';
    return ss.str();
}

}  // namespace stabdec
