#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qinfo/errors.hpp"

namespace qinfo {

/// Ordered list of subsystem dimensions d_1...d_n of a tensor-product space.
/// Subsystem order is positional and immutable; marginals keep the original
/// order of the factors they retain.
class HilbertSpec {
  public:
    explicit HilbertSpec(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw InvalidState("HilbertSpec: need at least one subsystem");
        for (int d : dims_)
            if (d < 2) throw InvalidState("HilbertSpec: every subsystem dimension must be >= 2");
    }

    int num_subsystems() const { return static_cast<int>(dims_.size()); }
    int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& dims() const { return dims_; }

    int total_dim() const {
        return std::accumulate(dims_.begin(), dims_.end(), 1, std::multiplies<int>());
    }

    bool operator==(const HilbertSpec& other) const { return dims_ == other.dims_; }
    bool operator!=(const HilbertSpec& other) const { return !(*this == other); }

  private:
    std::vector<int> dims_;
};

/// A subset of subsystem positions selecting a marginal (e.g. {0,2} out of
/// three factors). Stored sorted; duplicates are rejected.
class PartitionLabel {
  public:
    PartitionLabel(std::initializer_list<int> indices)
        : PartitionLabel(std::vector<int>(indices)) {}

    explicit PartitionLabel(std::vector<int> indices) : indices_(std::move(indices)) {
        if (indices_.empty()) throw InvalidPartition("PartitionLabel: empty index set");
        std::sort(indices_.begin(), indices_.end());
        if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
            throw InvalidPartition("PartitionLabel: duplicate subsystem index");
        if (indices_.front() < 0)
            throw InvalidPartition("PartitionLabel: negative subsystem index");
    }

    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }

    bool contains(int k) const {
        return std::binary_search(indices_.begin(), indices_.end(), k);
    }

    bool disjoint_with(const PartitionLabel& other) const {
        for (int k : other.indices_)
            if (contains(k)) return false;
        return true;
    }

    /// Union of two disjoint labels.
    PartitionLabel merged_with(const PartitionLabel& other) const {
        std::vector<int> all = indices_;
        all.insert(all.end(), other.indices_.begin(), other.indices_.end());
        return PartitionLabel(std::move(all));
    }

    /// Checks membership in a concrete space; throws InvalidPartition otherwise.
    void validate_against(const HilbertSpec& space) const {
        if (indices_.back() >= space.num_subsystems())
            throw InvalidPartition("PartitionLabel: index " + std::to_string(indices_.back()) +
                                   " out of range for " +
                                   std::to_string(space.num_subsystems()) + " subsystems");
    }

    static PartitionLabel full(int n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return PartitionLabel(std::move(all));
    }

    std::string to_string() const {
        std::string s;
        for (int k : indices_) s += std::to_string(k);
        return s;
    }

    bool operator==(const PartitionLabel& other) const { return indices_ == other.indices_; }

  private:
    std::vector<int> indices_;
};

}  // namespace qinfo
