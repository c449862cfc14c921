#pragma once

#include <stdexcept>
#include <string>

namespace usbpo {

/// Caller violated a precondition (bad dimensions, empty buffer, unknown id).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data is malformed (corrupt checkpoint, non-PSD covariance).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Unrecoverable runtime failure (non-finite loss, singular system).
class HardError : public std::runtime_error {
public:
    explicit HardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace usbpo
