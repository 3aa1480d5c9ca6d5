#ifndef ELLOCAL_ERRORS_HPP_
#define ELLOCAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ellocal {

/* Root of the library's exception hierarchy. */
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Bad argument: out-of-range prime, zero polynomial, odd-p violation... */
class DomainError : public Error {
  public:
    using Error::Error;
};

class ArithmeticError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class SingularCurveError : public Error {
  public:
    SingularCurveError() : Error("singular curve") {}
    explicit SingularCurveError(std::string const& what) : Error(what) {}
};

/* A p-adic decision could not be made below the precision ceiling. */
class UndecidedError : public Error {
  public:
    explicit UndecidedError(int precision)
        : Error("undecided at precision " + std::to_string(precision)),
          precision_(precision) {}
    int precision() const { return precision_; }

  private:
    int precision_;
};

/* Computed local data violates an identity that must hold exactly. */
class InconsistentDataError : public Error {
  public:
    using Error::Error;
};

/* A case analysis fell through; always a bug. */
class AlgorithmInvariantError : public Error {
  public:
    using Error::Error;
};

class OracleError : public Error {
  public:
    enum class Kind { not_found, schema_drift, transport, mismatch };

    OracleError(Kind kind, std::string const& what, std::string raw = {})
        : Error(what), kind_(kind), raw_(std::move(raw)) {}
    Kind kind() const { return kind_; }
    /* Raw payload of the response that could not be normalized. */
    std::string const& raw_payload() const { return raw_; }

  private:
    Kind kind_;
    std::string raw_;
};

}  // namespace ellocal

#endif /* ELLOCAL_ERRORS_HPP_ */
