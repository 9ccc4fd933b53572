#include "affcubic/error.hpp"

namespace affcubic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NearDiscriminant: return "NearDiscriminant";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::LineInPlane: return "LineInPlane";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::ChartDegenerate: return "ChartDegenerate";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::SharedComponent: return "SharedComponent";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::MultiplicityAmbiguity: return "MultiplicityAmbiguity";
    case ErrorKind::LocateFailure: return "LocateFailure";
    case ErrorKind::SamplingInconclusive: return "SamplingInconclusive";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotTransversal: return "NotTransversal";
    case ErrorKind::SingularCubic: return "SingularCubic";
    case ErrorKind::ConfigMissing: return "ConfigMissing";
    case ErrorKind::InvalidArrangement: return "InvalidArrangement";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_rejection(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NearDiscriminant:
    case ErrorKind::SingularCurve:
    case ErrorKind::NotTransversal:
    case ErrorKind::SingularCubic:
    case ErrorKind::SharedComponent:
    case ErrorKind::LineInPlane:
    case ErrorKind::NotOnCurve:
    case ErrorKind::RankDeficient:
      return true;
    default:
      return false;
  }
}

}  // namespace affcubic
