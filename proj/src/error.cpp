#include "fer/error.hpp"

namespace fer {

const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::io: return "io";
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::validation: return "validation";
        case ErrorCategory::backend: return "backend";
        case ErrorCategory::usage: return "usage";
        case ErrorCategory::runtime: return "runtime";
    }
    return "runtime";
}

}  // namespace fer
