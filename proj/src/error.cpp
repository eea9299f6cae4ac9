#include "monet/error.hpp"

namespace monet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotIntersectionClosed: return "NotIntersectionClosed";
    case Errc::MissingTopOrBottom: return "MissingTopOrBottom";
    case Errc::CounterexampleFound: return "CounterexampleFound";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotAnInvolution: return "NotAnInvolution";
    case Errc::NotProper: return "NotProper";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::LiftMismatch: return "LiftMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DomainTooLarge: return "DomainTooLarge";
    case Errc::NoCoveringIdeal: return "NoCoveringIdeal";
    case Errc::NotLocal: return "NotLocal";
    case Errc::IsField: return "IsField";
    case Errc::BadSpec: return "BadSpec";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace monet
