#pragma once

#include <stdexcept>
#include <string>

namespace fer {

// One-word categories surfaced by the CLI as machine-parseable error lines.
enum class ErrorCategory { io, parse, validation, backend, usage, runtime };

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

class NoFaceFoundError : public Error {
public:
    explicit NoFaceFoundError(const std::string& image_path)
        : Error(ErrorCategory::runtime, "no face found in " + (image_path.empty() ? "image" : image_path)),
          image_path_(image_path) {}

    const std::string& image_path() const { return image_path_; }

private:
    std::string image_path_;
};

class BackendError : public Error {
public:
    BackendError(const std::string& backend, const std::string& message)
        : Error(ErrorCategory::backend, backend + ": " + message), backend_(backend) {}

    const std::string& backend() const { return backend_; }

private:
    std::string backend_;
};

}  // namespace fer
