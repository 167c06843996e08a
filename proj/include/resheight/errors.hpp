#pragma once

#include <stdexcept>
#include <string>

namespace resheight {

// Input sizes beyond the documented feasibility envelope of an operation.
// Carries the offending dimensions in the message.
class feasibility_error : public std::runtime_error {
public:
    explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Two polynomials (or a polynomial and a monomial) from different variable
// universes were combined.
class universe_error : public std::invalid_argument {
public:
    explicit universe_error(const std::string& what) : std::invalid_argument(what) {}
};

// A root bracket without a sign change.
class bracket_error : public std::invalid_argument {
public:
    explicit bracket_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace resheight
