#pragma once

#include <stdexcept>
#include <string>

namespace fglab {

/// Base class of every error raised by the library. The `kind()` string is
/// stable and used by the CLI to map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FGLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

// ring_core
FGLAB_DEFINE_ERROR(NotInDomain)
FGLAB_DEFINE_ERROR(PrecisionTooLow)
FGLAB_DEFINE_ERROR(NotAUnit)
FGLAB_DEFINE_ERROR(ParseError)

// series_engine
FGLAB_DEFINE_ERROR(VariableMismatch)
FGLAB_DEFINE_ERROR(BoundMismatch)
FGLAB_DEFINE_ERROR(NonUnitConstantTerm)
FGLAB_DEFINE_ERROR(NonzeroConstantTerm)
FGLAB_DEFINE_ERROR(NotStrict)
FGLAB_DEFINE_ERROR(DivisionUndefined)

// fgl / chern
FGLAB_DEFINE_ERROR(UnsupportedDimension)
FGLAB_DEFINE_ERROR(DimensionMismatch)

// adams / cannibal / mahler
FGLAB_DEFINE_ERROR(UnsupportedK)
FGLAB_DEFINE_ERROR(InsufficientTable)
FGLAB_DEFINE_ERROR(RelationInconsistent)
FGLAB_DEFINE_ERROR(EvenK)
FGLAB_DEFINE_ERROR(IndexOutOfRange)
FGLAB_DEFINE_ERROR(NotNumerical)

#undef FGLAB_DEFINE_ERROR

/// A formal-group-law axiom fails at a specific monomial.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string monomial)
      : Error("AxiomViolation", axiom + " axiom fails at " + monomial),
        axiom_(std::move(axiom)),
        monomial_(std::move(monomial)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string axiom_;
  std::string monomial_;
};

/// The relation set does not span a graded piece; `degree()` is the weight.
class NotReducible : public Error {
 public:
  explicit NotReducible(int degree)
      : Error("NotReducible",
              "relations do not determine the generators of weight " +
                  std::to_string(degree)),
        degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class LiftObstruction : public Error {
 public:
  explicit LiftObstruction(int stage)
      : Error("LiftObstruction", "correction system unsolvable modulo 2^" +
                                     std::to_string(stage + 1)),
        stage_(stage) {}

  /// The element is fixed mod 2^stage but cannot be corrected mod 2^(stage+1).
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

class MismatchAt : public Error {
 public:
  MismatchAt(int row, int col, const std::string& detail)
      : Error("MismatchAt", "(" + std::to_string(row) + ", " +
                                std::to_string(col) + "): " + detail),
        row_(row),
        col_(col) {}

  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

}  // namespace fglab
