#pragma once

#include <stdexcept>
#include <string>

namespace gwci {

// Operands built over different coefficient rings.
class spec_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures that are mathematical rather than usage errors:
// unsupported model shapes, non-invertible elements, unsolvable recursions.
class math_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class not_invertible : public math_domain_error {
public:
    using math_domain_error::math_domain_error;
};

// A correlator operation was handed a model of the wrong positivity class.
class classification_error : public math_domain_error {
public:
    using math_domain_error::math_domain_error;
};

// Raised when an internal consistency check of a recursion fails. Seeing one
// of these means a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gwci
