#pragma once

#include <stdexcept>
#include <string>

namespace hkr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HKR_ERROR(Name)                     \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

HKR_ERROR(ZeroDivision);
HKR_ERROR(ParseError);
HKR_ERROR(DimensionMismatch);
HKR_ERROR(NotInvariant);
HKR_ERROR(NonRationalSpectrum);
HKR_ERROR(UnrecognizedDiagram);
HKR_ERROR(InvalidParams);
HKR_ERROR(SizeBound);
HKR_ERROR(NotInTable);
HKR_ERROR(ConstructionFailure);
HKR_ERROR(RelationFailure);
HKR_ERROR(MismatchWithTable1);
HKR_ERROR(GradingFailure);
HKR_ERROR(RouteDisagreement);
HKR_ERROR(NoSolution);
HKR_ERROR(NonUnique);
HKR_ERROR(AmbiguousCohomology);
HKR_ERROR(VerificationFailure);

#undef HKR_ERROR

}  // namespace hkr
