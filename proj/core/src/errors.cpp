#include "nilm/errors.hpp"

namespace nilm {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::config: return "config";
        case ErrorKind::usage: return "usage";
        case ErrorKind::ingest: return "ingest";
        case ErrorKind::alignment: return "alignment";
        case ErrorKind::normalization: return "normalization";
        case ErrorKind::dataset: return "dataset";
        case ErrorKind::train: return "train";
        case ErrorKind::pipeline: return "pipeline";
        case ErrorKind::evaluation: return "evaluation";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace nilm
