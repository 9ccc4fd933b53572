#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affcubic {

enum class ErrorKind {
  Parse,
  NonConvergence,
  NearDiscriminant,
  DegenerateConfiguration,
  LineInPlane,
  SingularCurve,
  ChartDegenerate,
  NotOnCurve,
  SharedComponent,
  RankDeficient,
  MultiplicityAmbiguity,
  LocateFailure,
  SamplingInconclusive,
  Undecided,
  InternalInconsistency,
  NotTransversal,
  SingularCubic,
  ConfigMissing,
  InvalidArrangement,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Whether an error signals that the input is mathematically unacceptable
/// (singular, non-transversal, ...) rather than an internal failure.
bool is_rejection(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace affcubic
