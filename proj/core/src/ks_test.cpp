#include "botcut/ks_test.hpp"

#include <algorithm>
#include <cmath>

#include "botcut/errors.hpp"

namespace botcut {

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw Error("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const auto na = a.size(), nb = b.size();
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < na || j < nb) {
        const double x = (j >= nb || (i < na && a[i] <= b[j])) ? a[i] : b[j];
        while (i < na && a[i] == x) ++i;
        while (j < nb && b[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / static_cast<double>(na) -
                                 static_cast<double>(j) / static_cast<double>(nb)));
    }
    return d;
}

double ks_pvalue(double d, std::size_t n_a, std::size_t n_b) {
    if (n_a == 0 || n_b == 0) throw Error("ks_pvalue: empty sample");
    const double ne =
        static_cast<double>(n_a) * static_cast<double>(n_b) / static_cast<double>(n_a + n_b);
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    if (lambda <= 0.0) return 1.0;

    double p = 0.0;
    double sign = 1.0;
    for (std::size_t k = 1; k <= 10'000'000; ++k) {
        const double term = 2.0 * std::exp(-2.0 * lambda * lambda *
                                           static_cast<double>(k) * static_cast<double>(k));
        p += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace botcut
