#pragma once

#include <stdexcept>
#include <string>

namespace mfb {

// Error taxonomy shared across the library. Each condition the contracts name
// gets its own type so callers (and tests) can catch precisely.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MFB_ERROR(Name)                                   \
    struct Name : Error {                                 \
        explicit Name(const std::string& m = #Name)       \
            : Error(std::string(#Name) + ": " + m) {}     \
    }

MFB_ERROR(SingularMatrix);
MFB_ERROR(NonIntegralSolution);
MFB_ERROR(NonPositiveMultiplicity);
MFB_ERROR(DivisionByZero);
MFB_ERROR(FieldMismatch);
MFB_ERROR(UnsupportedDegree);
MFB_ERROR(TruncationExhausted);
MFB_ERROR(IdenticalBranches);
MFB_ERROR(NotVanishingAtOrigin);
MFB_ERROR(NotBlowDownable);
MFB_ERROR(NotAbsorbable);
MFB_ERROR(TooLarge);
MFB_ERROR(Unsupported);
MFB_ERROR(MissingVerticalData);
MFB_ERROR(PairingIncomplete);
MFB_ERROR(PairingFailure);
MFB_ERROR(InfiniteOrder);
MFB_ERROR(SchemaError);

#undef MFB_ERROR

// Wraps a lower-level failure with the pipeline stage it happened in,
// so the CLI can report "stage: <name>" on exit code 3.
struct StageError : Error {
    StageError(const std::string& stage, const std::string& what)
        : Error(what), stage_name(stage) {}
    std::string stage_name;
};

} // namespace mfb
