#pragma once
#include <vector>

#include "lvmel/errors.hpp"

namespace lvmel {

// Coefficients of the perturbation polynomials f = sum a_ij x^i y^j and
// g = sum b_ij x^i y^j, i + j <= n.
class PerturbationCoeffs {
  public:
    explicit PerturbationCoeffs(int degree);

    int degree() const { return n_; }
    int size() const { return static_cast<int>(a_.size()); }

    double a(int i, int j) const { return a_[index(i, j)]; }
    double b(int i, int j) const { return b_[index(i, j)]; }
    void set_a(int i, int j, double v) { a_[index(i, j)] = v; }
    void set_b(int i, int j, double v) { b_[index(i, j)] = v; }

    // Evaluates (f, g) at (x, y).
    void eval(double x, double y, double& f, double& g) const;

    template <typename Fn>  // fn(i, j, a_ij, b_ij)
    void for_each(Fn&& fn) const {
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; j + i <= n_; ++j) fn(i, j, a(i, j), b(i, j));
    }

  private:
    int index(int i, int j) const;
    int n_;
    std::vector<double> a_, b_;
};

}  // namespace lvmel
