#pragma once

#include <stdexcept>
#include <string>

namespace monet {

enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  OrderTooLarge,
  NotAnIdeal,
  NotIntersectionClosed,
  MissingTopOrBottom,
  CounterexampleFound,
  CapExceeded,
  NotAnInvolution,
  NotProper,
  CertificateInvalid,
  LiftMismatch,
  PreconditionViolated,
  DomainTooLarge,
  NoCoveringIdeal,
  NotLocal,
  IsField,
  BadSpec,
  CacheCorrupt,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// A mathematical surprise rather than a bug: carries a serialized witness so
// the driver can dump it and exit with the dedicated status code.
class Counterexample : public Error {
public:
  Counterexample(Errc code, const std::string& what, std::string witness)
      : Error(code, what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace monet
