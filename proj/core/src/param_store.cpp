#include "nilm/param_store.hpp"

#include <fmt/format.h>

namespace nilm {

std::size_t ParamStore::add(std::string name, Tensor value, ParamRole role) {
    if (index_.count(name))
        raise(ErrorKind::usage, fmt::format("duplicate parameter name '{}'", name));
    ParamEntry e;
    e.name = std::move(name);
    e.grad = Tensor::zeros(value.shape());
    e.value = std::move(value);
    e.role = role;
    index_.emplace(e.name, entries_.size());
    entries_.push_back(std::move(e));
    return entries_.size() - 1;
}

std::size_t ParamStore::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        raise(ErrorKind::usage, fmt::format("unknown parameter '{}'", name));
    return it->second;
}

std::int64_t ParamStore::total_parameters() const noexcept {
    std::int64_t n = 0;
    for (const auto& e : entries_) n += e.value.numel();
    return n;
}

std::int64_t ParamStore::trainable_parameters() const noexcept {
    std::int64_t n = 0;
    for (const auto& e : entries_)
        if (e.trainable) n += e.value.numel();
    return n;
}

void ParamStore::zero_grads() {
    for (auto& e : entries_) e.grad.fill(0.0);
}

std::vector<Tensor> ParamStore::snapshot_values() const {
    std::vector<Tensor> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
}

void ParamStore::restore_values(const std::vector<Tensor>& snapshot) {
    if (snapshot.size() != entries_.size())
        raise(ErrorKind::usage, "snapshot entry count mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!snapshot[i].same_shape(entries_[i].value))
            raise(ErrorKind::usage, "snapshot shape mismatch");
        entries_[i].value = snapshot[i];
    }
}

} // namespace nilm
