#ifndef BRAUER_COMMON_HPP
#define BRAUER_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brauer {

// Base for everything thrown by this library.
class BrauerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A vertex, polygon or group element id that does not exist.
class UnknownIdError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// A configuration that fails validation was passed where a valid one is required.
class InvalidConfigurationError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// An operation was called outside its stated domain.
class PreconditionError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// 64-bit overflow in a count or dimension computation.
class ArithmeticOverflowError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// Malformed input text (JSON files, raw tables, CLI specs).
class ParseError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// A Cayley table that is not a group, or a group parameter out of range.
class GroupError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

// Two routes that must agree by theorem disagreed; an implementation bug.
class InternalCheckError : public BrauerError {
public:
    using BrauerError::BrauerError;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw ArithmeticOverflowError("64-bit overflow in addition");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw ArithmeticOverflowError("64-bit overflow in multiplication");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw ArithmeticOverflowError("64-bit overflow in subtraction");
    return out;
}

} // namespace brauer

#endif // BRAUER_COMMON_HPP
