#pragma once

#include <stdexcept>
#include <string>

namespace pw {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A relation that is supposed to be a strict partial order contains a cycle.
struct CycleError : Error {
  using Error::Error;
};

struct PairDeterminedError : Error {
  using Error::Error;
};

// Score vector with all entries equal (defines no rule).
struct DegenerateRule : Error {
  using Error::Error;
};

struct SmoothnessViolation : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  unsigned long long product;
  BudgetExceeded(const std::string& msg, unsigned long long p)
      : Error(msg), product(p) {}
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct UnsupportedAlpha : Error {
  using Error::Error;
};

struct AlphaOutOfRange : Error {
  using Error::Error;
};

struct InfeasibleTarget : Error {
  using Error::Error;
};

struct ParityError : Error {
  using Error::Error;
};

struct NoDifferentiatingPositions : Error {
  using Error::Error;
};

struct PatternAbsent : Error {
  using Error::Error;
};

struct OccurrenceCapViolated : Error {
  using Error::Error;
};

struct GadgetInfeasible : Error {
  using Error::Error;
};

struct InvalidSolution : Error {
  using Error::Error;
};

// Reverse-direction extraction failed on a co-winning completion.  Always a
// bug in the generator or the rule code, never ignored.
struct ExtractionFailed : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int ln) : Error(msg), line(ln) {}
};

}  // namespace pw
