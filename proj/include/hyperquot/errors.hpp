#pragma once

#include <stdexcept>
#include <string>

namespace hq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HQ_DEFINE_ERROR(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

HQ_DEFINE_ERROR(InvalidProfile);
HQ_DEFINE_ERROR(InvalidRange);
HQ_DEFINE_ERROR(InvalidTuple);
HQ_DEFINE_ERROR(InvalidMonomial);
HQ_DEFINE_ERROR(InvalidInput);
HQ_DEFINE_ERROR(NegativeExponent);
HQ_DEFINE_ERROR(WindowMismatch);
HQ_DEFINE_ERROR(OutOfWindow);
// Raised when an identity that must hold exactly does not (a bug, not bad input).
HQ_DEFINE_ERROR(InternalInconsistency);

#undef HQ_DEFINE_ERROR

} // namespace hq
