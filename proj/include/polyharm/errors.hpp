#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

/// Exit-code category for CLI mapping: 2 = bad arguments, 3 = domain
/// violation, 4 = parse error.
enum class ErrorKind { bad_arguments = 2, domain = 3, parse = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& w) : Error(ErrorKind::bad_arguments, w) {}
};

struct NotPolyharmonic : Error {
    explicit NotPolyharmonic(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct NotHarmonic : Error {
    explicit NotHarmonic(const std::string& w) : Error(ErrorKind::domain, w) {}
};

/// Laurent terms (negative exponents) where only polynomials on the disk
/// make sense.
struct NegativeExponent : Error {
    explicit NegativeExponent(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct DegenerateRadii : Error {
    explicit DegenerateRadii(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct RadiusViolation : Error {
    explicit RadiusViolation(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct SingularPoint : Error {
    explicit SingularPoint(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct NonIntegrable : Error {
    explicit NonIntegrable(const std::string& w) : Error(ErrorKind::domain, w) {}
};

/// Numeric evaluation hit its term/depth cap before the certified tail bound
/// met the requested tolerance. Carries the best value and estimate.
struct ToleranceNotReached : Error {
    ToleranceNotReached(const std::string& w, double best, double estimate)
        : Error(ErrorKind::domain, w), best_value(best), err_estimate(estimate) {}
    double best_value;
    double err_estimate;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorKind::parse, w) {}
};

}  // namespace polyharm
