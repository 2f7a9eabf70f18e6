#pragma once

#include <stdexcept>
#include <string>

namespace curvecat {

// Argument outside an operation's stated domain (e.g. genus < 2 where
// largeness is undefined).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed value: wrong arity, out-of-range residue, broken invariant.
class structural_error : public std::invalid_argument {
public:
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured brute-force bound was exceeded.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed (round-trip, genus recomputation, ...).
// Reaching this means a constructed object contradicts its own derivation.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation invoked on an entry that is missing required data.
class state_error : public std::logic_error {
public:
    explicit state_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace curvecat
