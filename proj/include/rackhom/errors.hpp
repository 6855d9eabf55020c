#ifndef RACKHOM_ERRORS_HPP
#define RACKHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rackhom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cayley-table (or closure) validation failure.
struct NotAGroupError : Error {
  enum class Reason { NotLatinSquare, NoIdentity, NotAssociative, MissingInverse };
  Reason reason;
  NotAGroupError(Reason r, const std::string& msg)
      : Error("not a group (" + reason_name(r) + "): " + msg), reason(r) {}
  static std::string reason_name(Reason r) {
    switch (r) {
      case Reason::NotLatinSquare: return "not-latin-square";
      case Reason::NoIdentity: return "no-identity";
      case Reason::NotAssociative: return "not-associative";
      case Reason::MissingInverse: return "missing-inverse";
    }
    return "?";
  }
};

/// Permutation closure exceeded the configured element cap.
struct ClosureBoundError : Error {
  std::size_t bound;
  explicit ClosureBoundError(std::size_t b)
      : Error("permutation closure exceeded bound " + std::to_string(b)), bound(b) {}
};

/// A class is too large for subrack enumeration. Signals a desk-scale
/// limit, not a bug.
struct CapExceededError : Error {
  std::size_t class_size;
  std::size_t cap;
  CapExceededError(std::size_t sz, std::size_t c)
      : Error("class size " + std::to_string(sz) + " exceeds enumeration cap " +
              std::to_string(c)),
        class_size(sz), cap(c) {}
};

/// A lemma-backed shortcut was invoked outside the lemma's hypotheses.
struct NotApplicableError : Error {
  using Error::Error;
};

/// The phi-image failed to be the full Boolean lattice 2^[m]. On a
/// p-group input this would falsify the sphere argument, so it is
/// surfaced loudly instead of being silently repaired.
struct ImageNotBooleanError : Error {
  using Error::Error;
};

struct UnknownClassError : Error {
  using Error::Error;
};

/// Defensive: a carrier handed to the conjugation-rack constructor was
/// not closed under conjugation.
struct ClassNotClosedError : Error {
  using Error::Error;
};

}  // namespace rackhom

#endif
