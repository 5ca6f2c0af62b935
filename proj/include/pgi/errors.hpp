#ifndef PGI_ERRORS_HPP
#define PGI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group/spec construction rejected (bad parameters, malformed input)
struct SpecError : Error {
  using Error::Error;
};

// closure or table would exceed the configured order cap
struct SizeLimitError : Error {
  using Error::Error;
};

// subgroup enumeration would exceed the subgroup-count cap
struct LatticeTooLargeError : Error {
  using Error::Error;
};

// cyclic-extension compatibility conditions violated
struct ExtensionInvalidError : Error {
  using Error::Error;
};

// invariant requested for a Dedekind group (max over an empty set)
struct DedekindError : Error {
  using Error::Error;
};

// hypotheses of a constructive lemma not satisfied
struct HypothesisError : Error {
  using Error::Error;
};

} // namespace pgi

#endif
