#pragma once
#include <stdexcept>
#include <string>

namespace lvmel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutsideAnnulusError : Error {
    explicit OutsideAnnulusError(const std::string& what) : Error(what) {}
};

struct IncompatibleTagError : Error {
    explicit IncompatibleTagError(const std::string& what) : Error(what) {}
};

struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& what) : Error(what) {}
};

struct UnsupportedKError : Error {
    explicit UnsupportedKError(const std::string& what) : Error(what) {}
};

struct DegreeMismatchError : Error {
    explicit DegreeMismatchError(const std::string& what) : Error(what) {}
};

struct StepTooSmallError : Error {
    explicit StepTooSmallError(const std::string& what) : Error(what) {}
};

struct UnachievableError : Error {
    explicit UnachievableError(const std::string& what) : Error(what) {}
};

struct IntegrationFailureError : Error {
    explicit IntegrationFailureError(const std::string& what) : Error(what) {}
};

struct LeftAnnulusError : Error {
    explicit LeftAnnulusError(const std::string& what) : Error(what) {}
};

// Carried by TargetImpossibleError for the (3,3) configuration: the third
// derivative of M on both annuli vanishes only at h0 = -4 a5+/a4+, and h0
// can lie in at most one of the two disjoint annuli.
struct ImpossibilityCertificate {
    double h0_from_uplus_attempt;   // h0 of a certified 3-zero instance on U+
    bool h0_in_uplus;
    double h0_from_uminus_attempt;  // h0 of a certified 3-zero instance on U-
    bool h0_in_uminus;
};

struct TargetImpossibleError : Error {
    TargetImpossibleError(const std::string& what, ImpossibilityCertificate cert)
        : Error(what), certificate(cert) {}
    ImpossibilityCertificate certificate;
};

}  // namespace lvmel
