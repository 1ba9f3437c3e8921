#ifndef ENDSLAB_ERRORS_HPP_
#define ENDSLAB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endslab {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands belong to different group families (or the same family with
  // different parameters).
  class FamilyMismatch : public Error {
   public:
    using Error::Error;
  };

  class InvalidParameter : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedSubgroup : public Error {
   public:
    using Error::Error;
  };

  class UnknownFixture : public Error {
   public:
    using Error::Error;
  };

  // Raised when a point or vertex has the wrong variant for the requested
  // operation, e.g. leaf decomposition of a ball whose vertices are not pairs.
  class VertexTypeError : public Error {
   public:
    using Error::Error;
  };

  class ArityMismatch : public Error {
   public:
    using Error::Error;
  };

  class CutError : public Error {
   public:
    using Error::Error;
  };

  // Vertex budget exhausted while materializing a ball. `reached_radius` is
  // the largest radius whose ball was completely materialized.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::size_t reached_radius, std::size_t vertices)
        : Error("vertex budget of " + std::to_string(vertices)
                + " exceeded; ball complete up to radius "
                + std::to_string(reached_radius)),
          reached_radius_(reached_radius),
          vertices_(vertices) {}

    std::size_t reached_radius() const noexcept {
      return reached_radius_;
    }
    std::size_t vertices() const noexcept {
      return vertices_;
    }

   private:
    std::size_t reached_radius_;
    std::size_t vertices_;
  };

}  // namespace endslab

#endif  // ENDSLAB_ERRORS_HPP_
