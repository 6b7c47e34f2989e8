#pragma once

#include <stdexcept>
#include <string>

namespace ymwk {

// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: unknown symbols, inconsistent indices, malformed text.
class usage_error : public error {
public:
    using error::error;
};

// A physical validity inequality is violated; the message names it.
class regime_error : public error {
public:
    using error::error;
};

// A numerical routine failed to reach its tolerance or budget.
class numeric_error : public error {
public:
    using error::error;
};

}  // namespace ymwk
