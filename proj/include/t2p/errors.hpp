#pragma once

#include <stdexcept>
#include <string>

namespace t2p {

enum class Errc {
  EmptyDocument,
  EmptyCorpus,
  UnsupportedSize,
  DegenerateLabels,
  UnlabeledSentence,
  ConflictingDimensions,
  UnknownRoomReference,
  UnsupportedShape,
  PlacementFailure,
  WallOverflow,
  FurnitureOverflow,
  UnknownSymbol,
  FormatMismatch,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyDocument: return "EmptyDocument";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::DegenerateLabels: return "DegenerateLabels";
    case Errc::UnlabeledSentence: return "UnlabeledSentence";
    case Errc::ConflictingDimensions: return "ConflictingDimensions";
    case Errc::UnknownRoomReference: return "UnknownRoomReference";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::PlacementFailure: return "PlacementFailure";
    case Errc::WallOverflow: return "WallOverflow";
    case Errc::FurnitureOverflow: return "FurnitureOverflow";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::FormatMismatch: return "FormatMismatch";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace t2p
