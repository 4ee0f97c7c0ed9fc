#include "lozenge/error.hpp"

namespace lozenge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadLetter: return "BadLetter";
    case Errc::Empty: return "Empty";
    case Errc::NotClosed: return "NotClosed";
    case Errc::SelfIntersecting: return "SelfIntersecting";
    case Errc::EmptyInterior: return "EmptyInterior";
    case Errc::BadSize: return "BadSize";
    case Errc::NotAPlanePartition: return "NotAPlanePartition";
    case Errc::NotATiling: return "NotATiling";
    case Errc::NotAHeightFunction: return "NotAHeightFunction";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotFlippable: return "NotFlippable";
    case Errc::Untileable: return "Untileable";
    case Errc::NotFlipClosed: return "NotFlipClosed";
    case Errc::NotComparable: return "NotComparable";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotFertile: return "NotFertile";
    case Errc::UnsatisfiableCube: return "UnsatisfiableCube";
    case Errc::DuplicateDetected: return "DuplicateDetected";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lozenge
