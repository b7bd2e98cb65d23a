#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct AmbientMismatch : std::runtime_error {
    explicit AmbientMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnIdeal : std::runtime_error {
    explicit NotAnIdeal(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct IdentityFailed : std::runtime_error {
    explicit IdentityFailed(const std::string& what) : std::runtime_error(what) {}
};

struct RadicalInconsistent : std::runtime_error {
    explicit RadicalInconsistent(const std::string& what) : std::runtime_error(what) {}
};

// Zoo constructor preconditions.
struct RootExists : std::runtime_error {
    explicit RootExists(const std::string& what) : std::runtime_error(what) {}
};

struct RootUnknown : std::runtime_error {
    explicit RootUnknown(const std::string& what) : std::runtime_error(what) {}
};

struct NotStrong : std::runtime_error {
    explicit NotStrong(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnisotropic : std::runtime_error {
    explicit NotAnisotropic(const std::string& what) : std::runtime_error(what) {}
};

struct SigmaZero : std::runtime_error {
    SigmaZero() : std::runtime_error("sigma must be non-zero") {}
};

struct DimTooSmall : std::runtime_error {
    explicit DimTooSmall(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leibniz
