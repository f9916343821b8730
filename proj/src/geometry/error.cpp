#include "equilib/error.hpp"

namespace equilib {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::ReferenceOutside: return "ReferenceOutside";
    case ErrorKind::DegenerateEquilibria: return "DegenerateEquilibria";
    case ErrorKind::NotMidscribed: return "NotMidscribed";
    case ErrorKind::ClassNotAchieved: return "ClassNotAchieved";
    case ErrorKind::BadSite: return "BadSite";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::NotMonostatic: return "NotMonostatic";
    case ErrorKind::ParamsOutOfWindow: return "ParamsOutOfWindow";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::CounterexampleFound: return "CounterexampleFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

}  // namespace equilib
