#pragma once

#include <complex>
#include <numbers>
#include <string_view>

namespace iwqm {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Which member of a dual eigenstate pair a value belongs to.
/// Kets evolve with growing factors, bras with decaying ones.
enum class FockSet { ket, bra };

constexpr std::string_view to_string(FockSet set) {
  return set == FockSet::ket ? "ket" : "bra";
}

/// Sign of the physical adjoint on the generators: g^dagger = (sign * i) g.
enum class AdjointSign : int { minus = -1, plus = +1 };

constexpr double to_double(AdjointSign s) { return static_cast<int>(s); }

/// sqrt(i/2) on the principal branch, the prefactor of the ladder operators.
inline Complex sqrt_i_half() { return std::sqrt(Complex{0.0, 0.5}); }

}  // namespace iwqm
