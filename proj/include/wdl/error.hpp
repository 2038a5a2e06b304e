#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdl {

using Element = std::uint32_t;

enum class Errc {
  not_a_partial_order,
  not_a_lattice,
  no_bounds,
  insufficient_generators,
  carrier_mismatch,
  unknown_name,
  not_a_congruence,
  not_normal,
  not_a_subalgebra,
  not_closed,
  empty_set,
  cap_exceeded,
  invalid_argument,
  axiom_violation,
  hypothesis_violation,
  parse_error,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::no_bounds: return "NoBounds";
    case Errc::insufficient_generators: return "InsufficientGenerators";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::unknown_name: return "UnknownName";
    case Errc::not_a_congruence: return "NotACongruence";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_a_subalgebra: return "NotASubalgebra";
    case Errc::not_closed: return "NotClosed";
    case Errc::empty_set: return "EmptySet";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::hypothesis_violation: return "HypothesisViolation";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every domain failure in the library is reported through this type. The
// witness holds the offending elements (if any), lexicographically least
// when several exist.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<Element> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<Element> witness_;
};

// Subset enumeration refuses carriers above this size.
inline constexpr std::size_t kSubsetEnumerationCap = 30;
// Largest carrier any construction may produce.
inline constexpr std::size_t kMaxCarrier = 4096;

}  // namespace wdl
