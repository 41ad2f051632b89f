#pragma once

#include <cstdint>
#include <vector>

namespace coresat::detail {

// Binary max-heap over variable indices ordered by activity, ties broken by
// the lower index. Assigned variables stay in the heap and are filtered out
// by the caller when popped (minisat-style lazy removal). The activity
// vector is passed into each operation so the heap stays a plain value type
// and the owning solver remains copyable.
class VarHeap {
public:
    using Activity = std::vector<double>;

    [[nodiscard]] bool empty() const { return heap_.empty(); }
    [[nodiscard]] bool contains(uint32_t v) const { return v < pos_.size() && pos_[v] >= 0; }

    void grow(uint32_t num_vars) { pos_.resize(num_vars, -1); }

    void insert(uint32_t v, const Activity& act) {
        if (contains(v)) return;
        pos_[v] = static_cast<int32_t>(heap_.size());
        heap_.push_back(v);
        sift_up(heap_.size() - 1, act);
    }

    // Restores heap order after v's activity increased.
    void increased(uint32_t v, const Activity& act) {
        if (contains(v)) sift_up(static_cast<size_t>(pos_[v]), act);
    }

    uint32_t pop_max(const Activity& act) {
        uint32_t top = heap_[0];
        heap_[0] = heap_.back();
        pos_[heap_[0]] = 0;
        heap_.pop_back();
        pos_[top] = -1;
        if (!heap_.empty()) sift_down(0, act);
        return top;
    }

private:
    static bool before(uint32_t a, uint32_t b, const Activity& act) {
        return act[a] > act[b] || (act[a] == act[b] && a < b);
    }

    void sift_up(size_t i, const Activity& act) {
        uint32_t v = heap_[i];
        while (i > 0) {
            size_t parent = (i - 1) / 2;
            if (!before(v, heap_[parent], act)) break;
            heap_[i] = heap_[parent];
            pos_[heap_[i]] = static_cast<int32_t>(i);
            i = parent;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int32_t>(i);
    }

    void sift_down(size_t i, const Activity& act) {
        uint32_t v = heap_[i];
        size_t n = heap_.size();
        while (true) {
            size_t child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && before(heap_[child + 1], heap_[child], act)) ++child;
            if (!before(heap_[child], v, act)) break;
            heap_[i] = heap_[child];
            pos_[heap_[i]] = static_cast<int32_t>(i);
            i = child;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int32_t>(i);
    }

    std::vector<uint32_t> heap_;
    std::vector<int32_t> pos_;
};

} // namespace coresat::detail
