#pragma once

#include <stdexcept>
#include <string>

namespace patsep {

// Base of all domain errors. name() is the stable identifier the CLI
// surfaces verbatim; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define PATSEP_ERROR(NAME)                                              \
    class NAME : public Error {                                         \
    public:                                                             \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}  \
    }

// core
PATSEP_ERROR(NotABijection);
PATSEP_ERROR(EmptyInput);
PATSEP_ERROR(SelectorOutOfRange);
PATSEP_ERROR(LengthTooLargeForRank);
PATSEP_ERROR(PatternLongerThanHost);
PATSEP_ERROR(MismatchedLengths);
PATSEP_ERROR(ParseError);

// separator
PATSEP_ERROR(KOutOfRange);
PATSEP_ERROR(InstanceTooLarge);

// checkerboard
PATSEP_ERROR(NonPositiveDimensions);
PATSEP_ERROR(CellNotInLayout);
PATSEP_ERROR(KTooSmall);
PATSEP_ERROR(ConstructionInvalid);

// metrics
PATSEP_ERROR(ValueOutOfRange);
PATSEP_ERROR(EqualValues);
PATSEP_ERROR(PositionOutOfRange);
PATSEP_ERROR(NonPositive);
PATSEP_ERROR(PoleAtTwo);
PATSEP_ERROR(MOutOfRange);
PATSEP_ERROR(OracleTooLarge);

// search
PATSEP_ERROR(BudgetExhausted);
PATSEP_ERROR(InfeasibleSize);
PATSEP_ERROR(TheoremFalsified);

#undef PATSEP_ERROR

}  // namespace patsep
