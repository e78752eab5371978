#include "asreg/errors.hpp"

namespace asreg {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotASRegular: return "NotASRegular";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::IrrationalParameter: return "IrrationalParameter";
    case ErrorKind::ZeroRoot: return "ZeroRoot";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::NonCentralCodeterminant: return "NonCentralCodeterminant";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace asreg
