#pragma once

#include <stdexcept>
#include <string>

namespace tricon {

// Index or parameter outside its admissible interval.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Input violates a documented precondition (non-square, non-Hermitian, mixed where pure is required).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NormalizationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dimensions incompatible with the requested construction.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SelectorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class KeyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tricon
