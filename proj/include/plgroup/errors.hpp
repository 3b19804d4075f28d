#pragma once

#include <stdexcept>
#include <string>

namespace plgroup {

// Base for all domain errors.  name() is the stable identifier printed by
// the CLI on the diagnostic stream.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define PLGROUP_DEFINE_ERROR(E)                              \
    class E : public Error {                                 \
    public:                                                  \
        explicit E(const std::string& what) : Error(#E, what) {} \
    }

PLGROUP_DEFINE_ERROR(NonMonotone);
PLGROUP_DEFINE_ERROR(OutOfDomain);
PLGROUP_DEFINE_ERROR(InvalidTuple);
PLGROUP_DEFINE_ERROR(DegenerateInterval);
PLGROUP_DEFINE_ERROR(ArityMismatch);
PLGROUP_DEFINE_ERROR(DisjointnessViolated);
PLGROUP_DEFINE_ERROR(CertificateFailure);
PLGROUP_DEFINE_ERROR(AreaMismatch);
PLGROUP_DEFINE_ERROR(NonPositiveDerivative);
PLGROUP_DEFINE_ERROR(CaseUndecided);
PLGROUP_DEFINE_ERROR(SeparationViolated);
PLGROUP_DEFINE_ERROR(IrrationalPower);
PLGROUP_DEFINE_ERROR(VacuousCase);
PLGROUP_DEFINE_ERROR(ParseError);

#undef PLGROUP_DEFINE_ERROR

// Condition (2) failures carry the offending break index.
class CollinearBreak : public Error {
public:
    CollinearBreak(std::size_t index, const std::string& what)
        : Error("CollinearBreak", what + " (break index " + std::to_string(index) + ")"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

}  // namespace plgroup
