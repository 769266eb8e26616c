// Mean-square of an evaluator along a vertical segment, the empirical face
// of the class-M mean-value bound (1/T) * int_0^T |phi(sigma0+it)|^2 dt = O(1).
#pragma once

#include <functional>

#include "zetalab/types.hpp"

namespace zetalab {

struct MeanSquareDiagnostics {
    double max_panel_oscillation = 0.0;  // max |f(t_{i+1})| - |f(t_i)| swing over a panel
    bool resolution_warning = false;     // oscillation per panel above threshold
};

// Composite Simpson over [0, T] with `steps` panels (steps >= 100, even
// count enforced internally).  Returns (1/T) * int_0^T |f(sigma0+it)|^2 dt.
double mean_square_on_line(const std::function<Complex(Complex)>& evaluator, double sigma0,
                           double T, std::size_t steps, MeanSquareDiagnostics* diag = nullptr);

}  // namespace zetalab
