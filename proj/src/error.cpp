#include "aes/error.hpp"

namespace aes {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::PoleAtC: return "PoleAtC";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::GammaPole: return "GammaPole";
        case ErrorKind::NoEigenstate: return "NoEigenstate";
        case ErrorKind::NonNormalizable: return "NonNormalizable";
        case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
        case ErrorKind::TruncationNotConverged: return "TruncationNotConverged";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::DegenerateNorm: return "DegenerateNorm";
        case ErrorKind::ZeroMean: return "ZeroMean";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace aes
