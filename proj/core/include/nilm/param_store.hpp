#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilm/tensor.hpp"

namespace nilm {

// Coarse layer role used by the fine-tuning freeze policy: feature layers
// (convolutional, recurrent) versus head layers (dense, output).
enum class ParamRole { feature, head };

struct ParamEntry {
    std::string name; // layer-qualified, e.g. "conv1.kernel"
    Tensor value;
    Tensor grad; // same shape as value
    ParamRole role = ParamRole::feature;
    bool trainable = true;
};

// Named parameter tensors with deterministic (insertion) iteration order.
class ParamStore {
public:
    std::size_t add(std::string name, Tensor value, ParamRole role);

    std::size_t size() const noexcept { return entries_.size(); }
    ParamEntry& entry(std::size_t i) { return entries_[i]; }
    const ParamEntry& entry(std::size_t i) const { return entries_[i]; }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t index_of(const std::string& name) const;
    ParamEntry& at(const std::string& name) { return entries_[index_of(name)]; }
    const ParamEntry& at(const std::string& name) const { return entries_[index_of(name)]; }

    std::int64_t total_parameters() const noexcept;
    std::int64_t trainable_parameters() const noexcept;

    void zero_grads();

    // Value-only snapshot/restore, used for early-stopping restores.
    std::vector<Tensor> snapshot_values() const;
    void restore_values(const std::vector<Tensor>& snapshot);

    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<ParamEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace nilm
