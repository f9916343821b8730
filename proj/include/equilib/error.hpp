#pragma once

#include <stdexcept>
#include <string>

namespace equilib {

enum class ErrorKind {
  DegenerateInput,
  NotConvex,
  ReferenceOutside,
  DegenerateEquilibria,
  NotMidscribed,
  ClassNotAchieved,
  BadSite,
  ConditionViolated,
  UnknownCatalogEntry,
  NotMonostatic,
  ParamsOutOfWindow,
  Unsupported,
  BudgetExhausted,
  NoConvergence,
  CounterexampleFound,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace equilib
