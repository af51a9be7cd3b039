#pragma once

#include <cstdint>
#include <string>

#include "nilm/tensor.hpp"

namespace nilm {

enum class LayerKind { conv1d, dense, gru, bigru, relu, dropout, flatten };

const char* layer_kind_name(LayerKind kind) noexcept;
LayerKind layer_kind_from_name(const std::string& name);

// One layer of a network stack. Convolutions always use stride 1 and "same"
// zero padding (pads split evenly, extra pad at the end).
struct LayerSpec {
    LayerKind kind = LayerKind::relu;
    std::string name; // layer-qualified id, e.g. "conv1", "dense1", "output"

    std::int64_t filter_size = 0; // conv1d
    std::int64_t filters = 0;     // conv1d
    std::int64_t stride = 1;      // conv1d
    std::int64_t units = 0;       // dense / gru / bigru
    double rate = 0.0;            // dropout
    bool return_sequence = false; // gru / bigru

    void validate() const;

    static LayerSpec conv1d(std::string name, std::int64_t filter_size, std::int64_t filters);
    static LayerSpec dense(std::string name, std::int64_t units);
    static LayerSpec gru(std::string name, std::int64_t units, bool return_sequence);
    static LayerSpec bigru(std::string name, std::int64_t units, bool return_sequence);
    static LayerSpec relu(std::string name);
    static LayerSpec dropout(std::string name, double rate);
    static LayerSpec flatten(std::string name);
};

// Single GRU cell step over a batch of rows, shared by the recurrent layers
// and exposed for direct testing. Gate order in wx/u/b columns is
// (update, reset, candidate):
//   z = sigmoid(x Wz + h Uz + bz)
//   r = sigmoid(x Wr + h Ur + br)
//   c = tanh(x Wc + r .* (h Uc) + bc)
//   h' = (1 - z) .* h + z .* c
// x: [rows, in] (or [in]), h: [rows, units] (or [units]),
// wx: [in, 3*units], u: [units, 3*units], b: [3*units].
Tensor gru_cell_step(const Tensor& x, const Tensor& h, const Tensor& wx, const Tensor& u,
                     const Tensor& b);

} // namespace nilm
