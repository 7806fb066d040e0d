#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgsemi {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define PGSEMI_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

  PGSEMI_DEFINE_ERROR(MalformedTable)
  PGSEMI_DEFINE_ERROR(NotPartialOrder)
  PGSEMI_DEFINE_ERROR(InvalidSemigroup)
  PGSEMI_DEFINE_ERROR(NotReflexive)
  PGSEMI_DEFINE_ERROR(NotSymmetric)
  PGSEMI_DEFINE_ERROR(DegreeMismatch)
  PGSEMI_DEFINE_ERROR(CapExceeded)
  PGSEMI_DEFINE_ERROR(InfeasibleDegree)
  PGSEMI_DEFINE_ERROR(NotBelow)
  PGSEMI_DEFINE_ERROR(NotAPath)
  PGSEMI_DEFINE_ERROR(InconsistentClassification)
  PGSEMI_DEFINE_ERROR(UndecidedEquality)
  PGSEMI_DEFINE_ERROR(NotAMorphism)
  PGSEMI_DEFINE_ERROR(BudgetExceeded)
  PGSEMI_DEFINE_ERROR(MismatchReport)

#undef PGSEMI_DEFINE_ERROR

  // One failed law together with the tuple that witnesses the failure.
  struct Violation {
    std::string              law;
    std::vector<std::size_t> witness;

    std::string to_string() const {
      std::ostringstream os;
      os << law << " (";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        os << (i == 0 ? "" : ", ") << witness[i];
      }
      os << ")";
      return os.str();
    }
  };

  // List of violations; empty iff every checked law holds. Only the first
  // `max_recorded` violations keep their witnesses, but all are counted.
  class ValidationReport {
   public:
    explicit ValidationReport(std::size_t max_recorded = 256)
        : _max_recorded(max_recorded) {}

    void add(std::string law, std::vector<std::size_t> witness) {
      ++_count;
      if (_violations.size() < _max_recorded) {
        _violations.push_back({std::move(law), std::move(witness)});
      }
    }

    void merge(ValidationReport const& other) {
      for (auto const& v : other._violations) {
        add(v.law, v.witness);
      }
      _count += other._count - other._violations.size();
    }

    bool ok() const noexcept {
      return _count == 0;
    }
    std::size_t count() const noexcept {
      return _count;
    }
    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

    bool mentions(std::string const& law) const {
      for (auto const& v : _violations) {
        if (v.law == law) {
          return true;
        }
      }
      return false;
    }

    std::string to_string() const {
      if (ok()) {
        return "ok";
      }
      std::ostringstream os;
      os << _count << " violation(s)";
      for (auto const& v : _violations) {
        os << "\n  " << v.to_string();
      }
      return os.str();
    }

   private:
    std::vector<Violation> _violations;
    std::size_t            _count = 0;
    std::size_t            _max_recorded;
  };

}  // namespace pgsemi
