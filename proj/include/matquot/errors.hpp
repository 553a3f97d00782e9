#pragma once

#include <stdexcept>
#include <string>

#include "matquot/element_set.hpp"

namespace matquot {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyBases : Error {
  EmptyBases() : Error("matroid must have at least one basis") {}
};

struct ExchangeAxiomViolation : Error {
  ElemSet b1, b2;
  int element;
  ExchangeAxiomViolation(ElemSet b1_, ElemSet b2_, int x)
      : Error("basis exchange fails for " + set_to_string(b1_) + ", " +
              set_to_string(b2_) + " at element " + std::to_string(x)),
        b1(b1_),
        b2(b2_),
        element(x) {}
};

struct GroundSetMismatch : Error {
  GroundSetMismatch(int n1, int n2)
      : Error("ground set sizes differ: " + std::to_string(n1) + " vs " +
              std::to_string(n2)) {}
};

struct NotAFlatLattice : Error {
  explicit NotAFlatLattice(const std::string& witness)
      : Error("input family is not the flat lattice of a matroid: " + witness) {}
};

struct InvalidModularCut : Error {
  explicit InvalidModularCut(const std::string& witness)
      : Error("not a modular cut: " + witness) {}
};

struct NotElementary : Error {
  explicit NotElementary(int k)
      : Error("quotient has nullity " + std::to_string(k) + ", expected 1") {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct InvalidFactorization : Error {
  explicit InvalidFactorization(const std::string& what)
      : Error("invalid factorization: " + what) {}
};

struct InvalidMajor : Error {
  explicit InvalidMajor(const std::string& what)
      : Error("invalid major: " + what) {}
};

struct InvalidFlag : Error {
  explicit InvalidFlag(const std::string& what)
      : Error("invalid flag matroid: " + what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what)
      : Error("instance too large: " + what) {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension mismatch: " + what) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what) : Error(what) {}
};

struct FiniteFieldUnsupported : Error {
  FiniteFieldUnsupported()
      : Error("operation requires an infinite field; use the rationals") {}
};

struct InvalidRealization : Error {
  explicit InvalidRealization(const std::string& what)
      : Error("invalid realization: " + what) {}
};

struct NotARealizationOfQ : Error {
  explicit NotARealizationOfQ(const std::string& what)
      : Error("matrices do not realize the quotient: " + what) {}
};

struct InvalidInputs : Error {
  explicit InvalidInputs(const std::string& what) : Error(what) {}
};

struct DegreeTooSmall : Error {
  DegreeTooSmall(int d, int needed)
      : Error("degree " + std::to_string(d) + " is below max generator degree " +
              std::to_string(needed)) {}
};

struct TooManyMonomials : Error {
  explicit TooManyMonomials(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
  LengthMismatch(std::size_t got, std::size_t want)
      : Error("coordinate vector has length " + std::to_string(got) +
              ", expected " + std::to_string(want)) {}
};

struct EmptySupport : Error {
  EmptySupport() : Error("tropical membership needs a nonempty support") {}
};

struct NotAChainOfFlats : Error {
  explicit NotAChainOfFlats(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace matquot
