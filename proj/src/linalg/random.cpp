#include <cmath>
#include <numbers>

#include "ovf/linalg.hpp"

namespace ovf {

ComplexNormalStream::ComplexNormalStream(std::uint64_t seed) : engine_(seed) {}

double ComplexNormalStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double ComplexNormalStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

cplx ComplexNormalStream::next() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, ComplexNormalStream& rng) {
  ComplexMatrix m(rows, cols);
  for (cplx& z : m.entries()) z = rng.next();
  return m;
}

ComplexMatrix seeded_random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  ComplexNormalStream rng(seed);
  return random_matrix(rows, cols, rng);
}

ComplexMatrix random_hermitian(std::size_t n, ComplexNormalStream& rng) {
  return hermitian_part(random_matrix(n, n, rng));
}

ComplexMatrix random_unitary(std::size_t n, ComplexNormalStream& rng) {
  return expi_hermitian(random_hermitian(n, rng));
}

}  // namespace ovf
