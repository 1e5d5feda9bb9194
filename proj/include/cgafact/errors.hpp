#ifndef CGAFACT_ERRORS_HPP
#define CGAFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgafact {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// C * rev(C) has a non-scalar coefficient beyond tolerance.
struct NotAMotionPolynomial : Error {
  explicit NotAMotionPolynomial(const std::string& msg) : Error(msg) {}
};

// C * rev(C) vanishes identically.
struct ZeroQuadrance : Error {
  explicit ZeroQuadrance(const std::string& msg) : Error(msg) {}
};

// Leading coefficient cannot be inverted, so the polynomial cannot be made monic.
struct NonInvertibleLeadingCoefficient : Error {
  explicit NonInvertibleLeadingCoefficient(const std::string& msg) : Error(msg) {}
};

// Null grade-1 element has vanishing point weight.
struct PointAtInfinity : Error {
  explicit PointAtInfinity(const std::string& msg) : Error(msg) {}
};

// Grade-1 element is not null within tolerance, so it is not a point.
struct NotNull : Error {
  explicit NotNull(const std::string& msg) : Error(msg) {}
};

// The motion degenerates at the requested parameter value.
struct SampleAtExceptionalParameter : Error {
  explicit SampleAtExceptionalParameter(const std::string& msg) : Error(msg) {}
};

// Real roots of a real polynomial appeared with odd total multiplicity;
// signals a root-classification failure.
struct OddRealRootCount : Error {
  explicit OddRealRootCount(const std::string& msg) : Error(msg) {}
};

// A computed factor candidate neither annihilates the polynomial cleanly nor
// misses it decisively.
struct RootVerificationFailed : Error {
  explicit RootVerificationFailed(const std::string& msg) : Error(msg) {}
};

// Element declared invertible but the computed inverse fails its residual check.
struct InverseVerificationFailed : Error {
  explicit InverseVerificationFailed(const std::string& msg) : Error(msg) {}
};

// Inverse requested for an element that is not invertible.
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// Affine solution space of an irregular system exceeds the supported dimension.
struct DimensionTooLarge : Error {
  explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};

// Singular values straddle the rank tolerance; no trustworthy rank decision.
struct NumericalRankAmbiguity : Error {
  explicit NumericalRankAmbiguity(const std::string& msg) : Error(msg) {}
};

// Multistart search exhausted without a solution meeting the constraints.
struct NoRealSolutionFound : Error {
  explicit NoRealSolutionFound(const std::string& msg) : Error(msg) {}
};

// Malformed serialized input (JSON / CSV / blade names).
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

}  // namespace cgafact

#endif
