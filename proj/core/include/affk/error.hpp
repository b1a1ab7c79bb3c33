#pragma once

#include <stdexcept>
#include <string>

namespace affk {

/// Malformed or out-of-contract input (bad partition, unbounded shape, r > k, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A residue word that hits a core with neither an addable nor a removable
/// corner of the next residue. The word is well formed; it just vanishes.
class DeadWord : public std::runtime_error {
public:
    explicit DeadWord(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace affk
