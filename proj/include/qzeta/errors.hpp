#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

// Precondition or domain violation: poles, division by zero, out-of-domain
// arguments for log/exp, log-degree overflow.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Precision exhausted or a series failed to converge within its budget.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qzeta
