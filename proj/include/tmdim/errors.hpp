#pragma once

#include <stdexcept>
#include <string>

namespace tmdim {

// exit codes follow the CLI contract: 1 input, 2 assumption, 3 internal
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const { return "Error"; }
    virtual int exit_code() const { return 1; }
};

#define TMDIM_DEFINE_ERROR(Name, Code)                                   \
    struct Name : Error {                                                \
        using Error::Error;                                              \
        const char* kind() const override { return #Name; }              \
        int exit_code() const override { return Code; }                  \
    };

TMDIM_DEFINE_ERROR(ParseError, 1)
TMDIM_DEFINE_ERROR(OverlapError, 1)
TMDIM_DEFINE_ERROR(DisconnectedError, 1)
TMDIM_DEFINE_ERROR(NotSimplyConnectedError, 1)
TMDIM_DEFINE_ERROR(MalformedError, 1)
TMDIM_DEFINE_ERROR(UnorderedDeficitsError, 1)
TMDIM_DEFINE_ERROR(MissingZeroError, 1)
TMDIM_DEFINE_ERROR(InvalidSequenceError, 1)
TMDIM_DEFINE_ERROR(ChainConflictError, 1)
TMDIM_DEFINE_ERROR(DanglingOverrideError, 1)
TMDIM_DEFINE_ERROR(IndexOutOfRange, 1)
TMDIM_DEFINE_ERROR(MixedDirectionError, 1)
TMDIM_DEFINE_ERROR(TooManyForExhaustive, 1)
TMDIM_DEFINE_ERROR(AssumptionViolated, 2)
TMDIM_DEFINE_ERROR(DecompositionMismatch, 3)

#undef TMDIM_DEFINE_ERROR

}  // namespace tmdim
