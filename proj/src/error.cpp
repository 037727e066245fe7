#include "fanpoly/error.hpp"

namespace fanpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotAFan: return "NotAFan";
    case ErrorKind::DuplicateCone: return "DuplicateCone";
    case ErrorKind::PointNotInterior: return "PointNotInterior";
    case ErrorKind::TargetNotInFan: return "TargetNotInFan";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::FanMismatch: return "FanMismatch";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::IncompatibleMultisets: return "IncompatibleMultisets";
    case ErrorKind::RayNotFound: return "RayNotFound";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::FaceBijectionFailure: return "FaceBijectionFailure";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileError: return "FileError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace fanpoly
