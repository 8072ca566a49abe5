#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: expression syntax, algebra files, unknown
/// generator names. Messages carry positions (line or column) where known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain (non-homogeneous
/// input where homogeneous is required, index out of range, mismatched
/// generator counts, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested computation is meaningless for this input: a command
/// requiring a Lie algebra was given a table violating the Jacobi identity,
/// or a witness was requested where none exists.
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (dimension cap, digit budget) was exceeded.
/// Exact arithmetic is never silently approximated; we refuse instead.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace pbw
