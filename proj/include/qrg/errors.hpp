#pragma once

#include <stdexcept>
#include <string>

namespace qrg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QRG_DEFINE_ERROR(Name)                                            \
    struct Name : Error {                                                 \
        explicit Name(const std::string& msg = #Name) : Error(msg) {}     \
    }

QRG_DEFINE_ERROR(DivisionByZero);
QRG_DEFINE_ERROR(NotADivisor);
QRG_DEFINE_ERROR(NotRealCoordinate);
QRG_DEFINE_ERROR(UnknownConstant);
QRG_DEFINE_ERROR(NotUnitary);
QRG_DEFINE_ERROR(NotFiniteOrder);
QRG_DEFINE_ERROR(ClosureBound);
QRG_DEFINE_ERROR(InvalidAutomorphism);
QRG_DEFINE_ERROR(SizeMismatch);
QRG_DEFINE_ERROR(UnrecognizedQuotient);
QRG_DEFINE_ERROR(NotComplex);
QRG_DEFINE_ERROR(NotUnit);
QRG_DEFINE_ERROR(InvalidParams);
QRG_DEFINE_ERROR(InvalidDescriptor);
QRG_DEFINE_ERROR(NotInvolutiveWitness);
QRG_DEFINE_ERROR(UnknownFamily);
QRG_DEFINE_ERROR(ParseError);

#undef QRG_DEFINE_ERROR

} // namespace qrg
