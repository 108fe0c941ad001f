// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lifeline {

// Base for everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain-level failures: the inputs parsed fine but violate a contract
// (empty cohort, out-of-range line, unknown id, ...). CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// I/O and format failures: unreadable files, malformed CSV/JSON/diff text.
// CLI exit code 2.
struct FormatError : Error {
    using Error::Error;
};

struct MalformedDiff : FormatError {
    using FormatError::FormatError;
};
struct LineOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};
struct LengthMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct UnknownMutant : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptySubset : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptyCohort : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptyPool : ValidationError {
    using ValidationError::ValidationError;
};
struct ManifestNotFound : FormatError {
    using FormatError::FormatError;
};
struct ManifestSchemaError : FormatError {
    using FormatError::FormatError;
};
struct MissingArtifactPath : FormatError {
    using FormatError::FormatError;
};
struct CsvSchemaError : FormatError {
    using FormatError::FormatError;
};
struct DuplicateMutantKey : FormatError {
    using FormatError::FormatError;
};
struct UnknownMutantInMatrix : FormatError {
    using FormatError::FormatError;
};
struct UnknownTestId : FormatError {
    using FormatError::FormatError;
};

}  // namespace lifeline
