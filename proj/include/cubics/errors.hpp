#pragma once

#include <stdexcept>
#include <string>

namespace cubics {

struct NotAlgebraicallyStable : std::runtime_error {
  explicit NotAlgebraicallyStable(const std::string& what) : std::runtime_error(what) {}
};

struct OddLengthWord : std::runtime_error {
  explicit OddLengthWord(const std::string& what) : std::runtime_error(what) {}
};

struct RadiusTooSmall : std::runtime_error {
  explicit RadiusTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NoEscapeRoot : std::runtime_error {
  explicit NoEscapeRoot(const std::string& what) : std::runtime_error(what) {}
};

struct BracketFailure : std::runtime_error {
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

struct SeedTooLoose : std::runtime_error {
  explicit SeedTooLoose(const std::string& what) : std::runtime_error(what) {}
};

struct NoReturnFound : std::runtime_error {
  explicit NoReturnFound(const std::string& what) : std::runtime_error(what) {}
};

struct NotNearVertex : std::runtime_error {
  explicit NotNearVertex(const std::string& what) : std::runtime_error(what) {}
};

struct ContractionFailure : std::runtime_error {
  explicit ContractionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroCoordinate : std::runtime_error {
  explicit ZeroCoordinate(const std::string& what) : std::runtime_error(what) {}
};

struct ChartDegenerate : std::runtime_error {
  explicit ChartDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct EscapedTube : std::runtime_error {
  explicit EscapedTube(const std::string& what) : std::runtime_error(what) {}
};

struct OutlierFound : std::runtime_error {
  explicit OutlierFound(const std::string& what) : std::runtime_error(what) {}
};

struct MixedGrids : std::runtime_error {
  explicit MixedGrids(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubics
