#include "nilm/tensor.hpp"

#include <fmt/format.h>

namespace nilm {

std::string shape_to_string(const std::vector<std::int64_t>& shape) {
    std::string out = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out += ", ";
        out += fmt::format("{}", shape[i]);
    }
    out += "]";
    return out;
}

} // namespace nilm
