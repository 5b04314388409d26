#pragma once

#include <stdexcept>
#include <string>

namespace ergoscan {

// Malformed input: bad config fields, incompatible spaces, violated preconditions.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-contract index: a query past a sequence's declared horizon.
class RangeError : public std::runtime_error {
public:
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ergoscan
