#ifndef QSTIRLING_ERRORS_HPP
#define QSTIRLING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qstirling {

// Division had a nonzero remainder where an identity promised exactness.
struct NonExactDivision : std::domain_error {
    explicit NonExactDivision(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at q=0 of a term q^e with e < 0.
struct ZeroAtNegativeExponent : std::domain_error {
    explicit ZeroAtNegativeExponent(const std::string& what) : std::domain_error(what) {}
};

// Reciprocal of a power series whose constant term is zero.
struct NonInvertibleSeries : std::domain_error {
    explicit NonInvertibleSeries(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfTriangle : std::out_of_range {
    explicit IndexOutOfTriangle(const std::string& what) : std::out_of_range(what) {}
};

// Argument outside the admissible set of an analytic operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Requested coefficient index at or beyond the series truncation order.
struct TruncationExceeded : std::out_of_range {
    explicit TruncationExceeded(const std::string& what) : std::out_of_range(what) {}
};

} // namespace qstirling

#endif // QSTIRLING_ERRORS_HPP
