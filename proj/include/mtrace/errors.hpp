#pragma once

#include <stdexcept>
#include <string>

namespace mtrace {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

// A structural axiom failed on concrete input; `axiom` names the identity and
// `witness` records the basis indices it failed on.
struct AxiomViolation : Error {
  AxiomViolation(std::string axiom_, std::string witness_)
      : Error("axiom violation: " + axiom_ + " at " + witness_),
        axiom(std::move(axiom_)),
        witness(std::move(witness_)) {}
  std::string axiom;
  std::string witness;
};

struct UnsupportedCharacteristic : Error {
  using Error::Error;
};

struct NotSplit : Error {
  using Error::Error;
};

struct NotARepresentation : Error {
  using Error::Error;
};

struct AlgebraMismatch : Error {
  using Error::Error;
};

struct NotAbsIndec : Error {
  using Error::Error;
};

struct NotAbsIrred : Error {
  using Error::Error;
};

struct ZeroMorphism : Error {
  using Error::Error;
};

// Hom(alpha, P) or Hom(P, beta) is not a line; `dim_found` is its dimension.
struct HomNotLine : Error {
  HomNotLine(std::string side_, int dim_found_)
      : Error("Hom space on the " + side_ + " side has dimension " +
              std::to_string(dim_found_) + ", expected 1"),
        side(std::move(side_)),
        dim_found(dim_found_) {}
  std::string side;
  int dim_found;
};

struct NotInIdeal : Error {
  using Error::Error;
};

}  // namespace mtrace
