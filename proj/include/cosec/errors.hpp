#pragma once

#include <stdexcept>
#include <string>

namespace cosec {

// Invalid argument for the requested quantity (x <= 0 for digamma, n < 2, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An evaluation point coincides with a pole of the summand/integrand.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

// The chosen representation is singular at this point although the target
// quantity itself is finite; the caller must pick another method.
class singularity_error : public domain_error {
public:
    explicit singularity_error(const std::string& what) : domain_error(what) {}
};

// An operation defined only for one parity was called with the other one.
class parity_error : public domain_error {
public:
    explicit parity_error(const std::string& what) : domain_error(what) {}
};

// A point excluded from an asymptotic statement (leading term degenerates).
class excluded_point_error : public domain_error {
public:
    explicit excluded_point_error(const std::string& what) : domain_error(what) {}
};

// Iteration/subdivision budget exhausted before the tolerance was met.
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Two routes to the same quantity disagree beyond tolerance.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosec
