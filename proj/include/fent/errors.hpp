#pragma once

#include <stdexcept>
#include <string>

namespace fent {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisMismatch : Error {
  explicit BasisMismatch(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct WrongParticleNumber : Error {
  explicit WrongParticleNumber(const std::string& what) : Error(what) {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& what) : Error(what) {}
};

struct ZeroAfterAntisymmetrization : Error {
  explicit ZeroAfterAntisymmetrization(const std::string& what) : Error(what) {}
};

struct NonOrthonormalOrbitals : Error {
  explicit NonOrthonormalOrbitals(const std::string& what) : Error(what) {}
};

struct NotAntisymmetric : Error {
  explicit NotAntisymmetric(const std::string& what) : Error(what) {}
};

struct NonHermitianObservable : Error {
  explicit NonHermitianObservable(const std::string& what) : Error(what) {}
};

struct ZeroDensity : Error {
  explicit ZeroDensity(const std::string& what) : Error(what) {}
};

}  // namespace fent
