#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace xherm {

/// Non-decreasing sequence of non-negative integers. Leading zeros are kept.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
            if (i > 0 && parts_[i] < parts_[i - 1])
                throw std::invalid_argument("partition parts must be non-decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int m = 0;
        for (int p : parts_) m += p;
        return m;
    }
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Strictly increasing index list.
class GapSequence {
public:
    GapSequence() = default;
    GapSequence(std::initializer_list<int> ks) : GapSequence(std::vector<int>(ks)) {}
    explicit GapSequence(std::vector<int> ks) : ks_(std::move(ks)) {
        for (std::size_t i = 0; i < ks_.size(); ++i) {
            if (ks_[i] < 0) throw std::invalid_argument("gap sequence entries must be non-negative");
            if (i > 0 && ks_[i] <= ks_[i - 1])
                throw std::invalid_argument("gap sequence must be strictly increasing");
        }
    }
    const std::vector<int>& ks() const { return ks_; }
    bool contains(int k) const { return std::binary_search(ks_.begin(), ks_.end(), k); }
    friend bool operator==(const GapSequence&, const GapSequence&) = default;

private:
    std::vector<int> ks_;
};

/// k_i = lambda_i + i - 1 (1-based i).
inline GapSequence gap_sequence(const Partition& p) {
    std::vector<int> ks;
    ks.reserve(p.parts().size());
    for (std::size_t i = 0; i < p.parts().size(); ++i) ks.push_back(p.parts()[i] + static_cast<int>(i));
    return GapSequence(std::move(ks));
}

inline Partition double_partition(const Partition& p) {
    std::vector<int> d;
    d.reserve(2 * p.parts().size());
    for (int v : p.parts()) {
        d.push_back(v);
        d.push_back(v);
    }
    return Partition(std::move(d));
}

/// Optional initial block starting at 0, then even-length runs of consecutive integers.
inline bool is_adler(const GapSequence& g) {
    const auto& k = g.ks();
    std::size_t i = 0;
    while (i < k.size()) {
        std::size_t j = i + 1;
        while (j < k.size() && k[j] == k[j - 1] + 1) ++j;
        bool initial = (i == 0 && k[0] == 0);
        if (!initial && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

inline int codimension(const Partition& p) { return 2 * p.size(); }

/// Indices n for which the doubled-family Wronskian degenerates.
inline std::set<int> excluded_indices(const Partition& p) {
    auto ks = gap_sequence(double_partition(p)).ks();
    return {ks.begin(), ks.end()};
}

/// Degree of H_{lambda^2, n}: 2*sum(parts) - 2l + n.
inline int xop_degree(const Partition& p, int n) {
    if (n < 0) throw domain_error("xop_degree: n must be non-negative");
    if (excluded_indices(p).count(n)) throw gap_sequence_error(n);
    return 2 * p.size() - 2 * p.length() + n;
}

}  // namespace xherm
