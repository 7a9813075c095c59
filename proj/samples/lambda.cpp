// Expands the level-2 covering map, specializes it to the lambda function and
// prints its cusp metric in the coordinate f.
#include <iostream>

#include <cusp/hauptmodul.hpp>
#include <cusp/metric.hpp>
#include <cusp/verify.hpp>

int main()
{
    using namespace cusp;

    const auto h = solve_congruence(2, 8);
    std::cout << "normalized level-2 series:\n";
    for (int m = 3; m <= h.normalized.order(); ++m) {
        std::cout << "  C_" << m << " = " << h.normalized[m] << "\n";
    }

    const auto lambda = specialize(h, 16, -128);
    std::cout << "lambda = " << lambda << "\n";

    const Complex tau(0, 2);
    std::cout << "lambda(2i) from the series: " << eval_series(lambda, 2, tau).real().str(25) << "\n";
    std::cout << "lambda(2i) from theta:      " << theta_lambda_oracle(tau).real().str(25) << "\n";

    const auto T = rescale_to_f(specialize(inside_modulus(h.normalized, 3), -8), 16);
    std::cout << "metric terms f^s conj(f)^t L^j, L = 1/log|f/16|:\n";
    for (const auto &[k, c] : T.terms()) {
        std::cout << "  (" << k.s << "," << k.t << "," << k.j << ") " << c << "\n";
    }
}
