#ifndef F4MS_ERRORS_HPP
#define F4MS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace f4ms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& what) : Error("degree overflow: " + what) {}
};

struct SupportOverflow : Error {
    explicit SupportOverflow(std::size_t n)
        : Error("Hahn support overflow: " + std::to_string(n) + " terms") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("zero element has no inverse") {}
};

struct RadicalInput : Error {
    RadicalInput() : Error("input lies in the radical of f") {}
};

struct Unsolvable : Error {
    explicit Unsolvable(const std::string& what) : Error("unsolvable system: " + what) {}
};

struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& what) : Error("inconsistent system: " + what) {}
};

struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& what) : Error("closure violation: " + what) {}
};

struct ClosureFailure : Error {
    explicit ClosureFailure(const std::string& what) : Error("root closure failed: " + what) {}
};

struct ModelViolation : Error {
    explicit ModelViolation(const std::string& what) : Error("vertex model violation: " + what) {}
};

struct WitnessMismatch : Error {
    WitnessMismatch() : Error("lambda^theta + lambda != delta") {}
};

struct ZeroBeta : Error {
    ZeroBeta() : Error("beta must be nonzero") {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

struct DescriptorMismatch : Error {
    DescriptorMismatch() : Error("elements belong to different field descriptors") {}
};

} // namespace f4ms

#endif
