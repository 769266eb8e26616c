#include "zetalab/mean_value.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zetalab {

double mean_square_on_line(const std::function<Complex(Complex)>& evaluator, double sigma0,
                           double T, std::size_t steps, MeanSquareDiagnostics* diag) {
    if (!(T > 0.0)) throw std::invalid_argument("mean_square_on_line: T must be positive");
    if (steps < 100) throw std::invalid_argument("mean_square_on_line: steps must be >= 100");
    if (steps % 2 != 0) ++steps;

    const double h = T / static_cast<double>(steps);
    std::vector<double> sq(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = h * static_cast<double>(i);
        sq[i] = std::norm(evaluator(Complex(sigma0, t)));
    }

    double sum = sq[0] + sq[steps];
    for (std::size_t i = 1; i < steps; ++i) sum += sq[i] * ((i % 2 == 1) ? 4.0 : 2.0);
    const double integral = sum * h / 3.0;

    if (diag != nullptr) {
        double max_osc = 0.0;
        for (std::size_t i = 0; i < steps; ++i) {
            const double lo = std::sqrt(sq[i]), hi = std::sqrt(sq[i + 1]);
            const double denom = 0.5 * (lo + hi) + 1e-300;
            max_osc = std::max(max_osc, std::abs(hi - lo) / denom);
        }
        diag->max_panel_oscillation = max_osc;
        diag->resolution_warning = max_osc > 0.5;
    }
    return integral / T;
}

}  // namespace zetalab
