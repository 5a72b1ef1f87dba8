#include "lvmel/coeffs.hpp"

#include <string>

namespace lvmel {

PerturbationCoeffs::PerturbationCoeffs(int degree) : n_(degree) {
    if (degree < 0 || degree > 12)
        throw Error("perturbation degree out of range: " + std::to_string(degree));
    int sz = (degree + 1) * (degree + 2) / 2;
    a_.assign(sz, 0.0);
    b_.assign(sz, 0.0);
}

int PerturbationCoeffs::index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > n_)
        throw Error("coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") exceeds degree " + std::to_string(n_));
    // row s = i + j holds s+1 entries ordered by i
    int s = i + j;
    return s * (s + 1) / 2 + i;
}

void PerturbationCoeffs::eval(double x, double y, double& f, double& g) const {
    double xp[13], yp[13];
    xp[0] = yp[0] = 1.0;
    for (int k = 1; k <= n_; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
    }
    f = g = 0.0;
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j + i <= n_; ++j) {
            double m = xp[i] * yp[j];
            f += a(i, j) * m;
            g += b(i, j) * m;
        }
}

}  // namespace lvmel
