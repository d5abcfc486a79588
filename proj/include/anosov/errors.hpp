#pragma once

#include <stdexcept>
#include <string>

namespace anosov {

// Error hierarchy. Every failure mode of the library maps to one of these;
// the CLI translates them into exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonHyperbolic : Error {
  using Error::Error;
};
struct NonOrientable : Error {
  using Error::Error;
};
struct NonFinite : Error {
  using Error::Error;
};
struct OutOfChart : Error {
  using Error::Error;
};
struct NotOnLeaf : Error {
  using Error::Error;
};
struct IncompatibleSpec : Error {
  using Error::Error;
};
struct InsufficientGrid : Error {
  using Error::Error;
};
struct NonPositiveLambda : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct NotSuspension : Error {
  using Error::Error;
};
struct SectionMismatch : Error {
  using Error::Error;
};
struct NonPositiveReturn : Error {
  using Error::Error;
};
struct NoSignChange : Error {
  using Error::Error;
};
struct BadScale : Error {
  using Error::Error;
};
struct GridMismatch : Error {
  using Error::Error;
};
struct NoAccumulation : Error {
  using Error::Error;
};
struct MissingArtifacts : Error {
  using Error::Error;
};

}  // namespace anosov
