#pragma once

#include <stdexcept>
#include <string>

namespace hschur {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPartition : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct InvalidCorners : std::domain_error {
    using std::domain_error::domain_error;
};

// lambda - omega_ell is undefined: the diagram has no column of that height.
struct NoSuchColumn : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonSquareMinor : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct UnknownRow : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct MissingSymbol : std::domain_error {
    using std::domain_error::domain_error;
};

struct Incompatible : std::domain_error {
    using std::domain_error::domain_error;
};

struct InexactDivision : std::domain_error {
    using std::domain_error::domain_error;
};

struct MissingSeed : std::domain_error {
    using std::domain_error::domain_error;
};

struct IllegalTableau : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace hschur
