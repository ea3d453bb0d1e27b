#pragma once
// Half-open integer intervals over an opaque atomic-unit coordinate
// (characters, seconds, rows -- the library never cares which).

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ica {

struct Span {
    std::int64_t start = 0;
    std::int64_t end = 0; // exclusive

    std::int64_t length() const { return end - start; }
    bool empty() const { return end <= start; }

    bool overlaps(const Span& other) const {
        return start < other.end && other.start < end;
    }

    bool contains(const Span& other) const {
        return start <= other.start && other.end <= end;
    }

    friend bool operator==(const Span&, const Span&) = default;
};

// Length of the intersection of two spans (0 when disjoint).
inline std::int64_t overlap_length(const Span& a, const Span& b) {
    const std::int64_t lo = std::max(a.start, b.start);
    const std::int64_t hi = std::min(a.end, b.end);
    return hi > lo ? hi - lo : 0;
}

// Sorts and merges touching/overlapping spans into a disjoint union.
inline std::vector<Span> merge_spans(std::vector<Span> spans) {
    std::erase_if(spans, [](const Span& s) { return s.empty(); });
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
        return a.start < b.start || (a.start == b.start && a.end < b.end);
    });
    std::vector<Span> merged;
    for (const Span& s : spans) {
        if (!merged.empty() && s.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, s.end);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

inline std::int64_t total_length(const std::vector<Span>& disjoint) {
    std::int64_t sum = 0;
    for (const Span& s : disjoint) sum += s.length();
    return sum;
}

// Length of the intersection of two span unions.
inline std::int64_t overlap_length(const std::vector<Span>& a, const std::vector<Span>& b) {
    const std::vector<Span> ma = merge_spans(a);
    const std::vector<Span> mb = merge_spans(b);
    std::int64_t sum = 0;
    std::size_t i = 0, j = 0;
    while (i < ma.size() && j < mb.size()) {
        sum += overlap_length(ma[i], mb[j]);
        if (ma[i].end < mb[j].end) {
            ++i;
        } else {
            ++j;
        }
    }
    return sum;
}

} // namespace ica
