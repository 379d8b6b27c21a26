#pragma once

#include <stdexcept>
#include <string>

namespace graddens {

/// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an operation's inputs was violated.
struct invalid_input : error {
    using error::error;
};

/// Two density estimates live on incompatible u grids.
struct grid_mismatch : invalid_input {
    using invalid_input::invalid_input;
};

/// A query interval reaches outside the data it is applied to.
struct query_out_of_range : invalid_input {
    using invalid_input::invalid_input;
};

/// The queried u value is in (or too near) the excluded set C, or the
/// second derivative vanishes on a non-null part of the domain.
struct degenerate_error : error {
    using error::error;
};

/// Two level-set roots fell inside adjacent probe cells; the caller
/// should retry with a finer probe grid.
struct probe_too_coarse : error {
    using error::error;
};

/// The inverse transform of a characteristic-function table carried more
/// imaginary mass than rounding can explain.
struct excess_imaginary : error {
    using error::error;
};

/// File read/write failure; the message names the offending path.
struct io_error : error {
    using error::error;
};

/// An internal invariant (e.g. discrete Parseval normalization) broke.
struct internal_error : error {
    using error::error;
};

/// Writes a one-line diagnostic to stderr. Used for the warn-but-continue
/// conditions (under-resolved resonance widths, spectral coverage gaps,
/// clipped negative mass).
void diag(const std::string& message);

}  // namespace graddens
