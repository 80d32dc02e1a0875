#pragma once

#include <stdexcept>
#include <string>

namespace uvlab {

// Exit-code buckets used by the CLI: 1 = counterexample, 2 = input error,
// 3 = size limit.
enum class ErrorKind { Input, SizeLimit, Counterexample };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error input_error(const std::string& code, const std::string& what) {
  return Error(ErrorKind::Input, code, what);
}

#define UVLAB_INPUT_ERROR(code)                                      \
  class code : public Error {                                        \
   public:                                                           \
    explicit code(const std::string& what)                           \
        : Error(ErrorKind::Input, #code, what) {}                    \
  }

UVLAB_INPUT_ERROR(CycleError);
UVLAB_INPUT_ERROR(DuplicateLabelError);
UVLAB_INPUT_ERROR(UnknownElement);
UVLAB_INPUT_ERROR(HostMismatch);
UVLAB_INPUT_ERROR(AxiomViolation);
UVLAB_INPUT_ERROR(DegenerateBA);
UVLAB_INPUT_ERROR(ZeroRelativization);
UVLAB_INPUT_ERROR(NotAnIdeal);
UVLAB_INPUT_ERROR(ImproperFilter);
UVLAB_INPUT_ERROR(NotAHomomorphism);
UVLAB_INPUT_ERROR(NotAUVMap);
UVLAB_INPUT_ERROR(NotOpen);
UVLAB_INPUT_ERROR(NotCORO);
UVLAB_INPUT_ERROR(NotUVSpace);
UVLAB_INPUT_ERROR(NoMeet);
UVLAB_INPUT_ERROR(NoWitness);
UVLAB_INPUT_ERROR(NotStone);
UVLAB_INPUT_ERROR(NotBoolean);
UVLAB_INPUT_ERROR(NotStoneLocale);
UVLAB_INPUT_ERROR(EmptySpace);
UVLAB_INPUT_ERROR(TooLong);
UVLAB_INPUT_ERROR(TooManyBlocks);
UVLAB_INPUT_ERROR(TrivialSplit);
UVLAB_INPUT_ERROR(SchemaError);

#undef UVLAB_INPUT_ERROR

class SizeLimit : public Error {
 public:
  explicit SizeLimit(const std::string& what)
      : Error(ErrorKind::SizeLimit, "SizeLimit", what) {}
};

// A verified theorem failed on a concrete instance.  `payload` is a JSON
// document that `uvlab replay` accepts to reproduce the failure.
class CounterexampleError : public Error {
 public:
  CounterexampleError(const std::string& what, std::string payload)
      : Error(ErrorKind::Counterexample, "CounterexampleError", what),
        payload_(std::move(payload)) {}

  const std::string& payload() const { return payload_; }

 private:
  std::string payload_;
};

}  // namespace uvlab
