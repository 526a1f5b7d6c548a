#ifndef LABELING_ERRORS_HPP
#define LABELING_ERRORS_HPP

#include <stdexcept>

namespace labeling {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph or label files.
struct ParseError : Error {
  using Error::Error;
};

// A label that cannot have been produced by the encoder: bad padding,
// impossible suffix length, identifier out of range.
struct CorruptLabelError : Error {
  using Error::Error;
};

// Embedding overflowed a cluster or a bisector exceeded its budget.
// Signals a constant-table problem, not a caller bug.
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace labeling

#endif
