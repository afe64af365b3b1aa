#ifndef ORBSW_ERRORS_HPP
#define ORBSW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbsw {

// Root of every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible operands: bundles over different surfaces, mismatched
// tuple lengths, an index out of range. These are caller bugs.
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// Value outside the supported domain: a divisor that does not divide,
// a basis change with determinant != 1, a divergent genus-0 sum, a
// series denominator whose lowest coefficient is not a unit.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed or schema-violating input document. Messages carry the
// offending field path.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace orbsw

#endif
