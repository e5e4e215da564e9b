#pragma once

#include <stdexcept>
#include <string>

namespace mlr {

// Every library failure derives from Error; name() is the stable identifier
// used by the CLI and in JSON reports.
class Error : public std::runtime_error {
public:
    Error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}
    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

#define MLR_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what = #Name) : Error(#Name, what) {} \
    }

MLR_DEFINE_ERROR(ZeroDenominator);
MLR_DEFINE_ERROR(DivisionByZero);
MLR_DEFINE_ERROR(PoleAtPoint);
MLR_DEFINE_ERROR(IdenticallySingular);
MLR_DEFINE_ERROR(InvalidPartition);
MLR_DEFINE_ERROR(CellOutsideShape);
MLR_DEFINE_ERROR(SizeMismatch);
MLR_DEFINE_ERROR(NotVerticalStrip);
MLR_DEFINE_ERROR(NotHorizontalStrip);
MLR_DEFINE_ERROR(InvalidTableau);
MLR_DEFINE_ERROR(NotRectangular);
MLR_DEFINE_ERROR(WrongKind);
MLR_DEFINE_ERROR(NTooSmall);
MLR_DEFINE_ERROR(NotLatticeWord);
MLR_DEFINE_ERROR(NotUniqueBlock);
MLR_DEFINE_ERROR(CapTooSmall);
MLR_DEFINE_ERROR(NuNotPartition);
MLR_DEFINE_ERROR(NotUniqueTableau);
MLR_DEFINE_ERROR(KostkaNotOne);
MLR_DEFINE_ERROR(ParseError);

#undef MLR_DEFINE_ERROR

}  // namespace mlr
