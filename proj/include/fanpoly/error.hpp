#pragma once

#include <stdexcept>
#include <string>

namespace fanpoly {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NotPointed,
  ZeroVector,
  NotAFan,
  DuplicateCone,
  PointNotInterior,
  TargetNotInFan,
  NotAFace,
  LatticeMismatch,
  IndexOutOfRange,
  Incompatible,
  FanMismatch,
  ConeNotInFan,
  NotComplete,
  WrongRank,
  IncompatibleMultisets,
  RayNotFound,
  NotSimplicial,
  FaceBijectionFailure,
  NotAPoset,
  ParseError,
  FileError,
};

const char* to_string(ErrorKind kind);

/// The library only throws this type. what() is "Kind: message".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fanpoly
