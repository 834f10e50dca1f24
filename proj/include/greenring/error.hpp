#pragma once

#include <stdexcept>
#include <string>

namespace greenring {

enum class ErrorKind {
    NilpotentType,     // g^n = 1: the datum is of nilpotent type
    DegenerateOrder,   // chi(g) = 1, i.e. n < 2
    MalformedTuple,    // arity mismatch or out-of-range tuple entry
    CharacterOrder,    // ord(chi(g)) = n but chi^n != 1: not a group datum
    DatumMismatch,     // operands belong to different data
    InvalidParameters, // bad (m, n) for the Radford family
    NonPositiveIndex,  // Dickson index < 1
    IndexOutOfRange,   // stable label index outside 1..n-1
    EmptyStableBasis,
    RelationViolation, // realized module fails a defining relation
    DimensionMismatch, // decomposition does not add up to the module dimension
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace greenring
