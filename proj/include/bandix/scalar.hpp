#pragma once

#include <cmath>
#include <concepts>

namespace bandix {

inline bool is_zero(double x) noexcept { return x == 0.0; }
inline double to_double(double x) noexcept { return x; }
inline double abs(double x) noexcept { return std::fabs(x); }

/// Scalars every band solver is written against: 64-bit floats, exact
/// rationals, and rational functions in one indeterminate.
template <class S>
concept Field = std::regular<S> && requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { to_double(a) } -> std::convertible_to<double>;
    S(0);
    S(1);
};

/// Fields that also carry an absolute value and a total order (needed for norms).
template <class S>
concept OrderedField = Field<S> && std::totally_ordered<S> && requires(S a) {
    { abs(a) } -> std::convertible_to<S>;
};

}  // namespace bandix
