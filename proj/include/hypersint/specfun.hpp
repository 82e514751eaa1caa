#pragma once

#include <complex>
#include <functional>

namespace hypersint {

using cplx = std::complex<double>;

// Principal branch of ln Γ(z). Throws ErrorKind::pole at non-positive integers.
cplx log_gamma(cplx z);
double log_gamma(double x);  // ln|Γ(x)|, x not a non-positive integer

// Rising factorial (a)_n.
cplx pochhammer(cplx a, int n);
double pochhammer(double a, int n);

double laguerre(int n, double a, double x);
cplx jacobi(int n, cplx a, cplx b, cplx x);
double jacobi(int n, double a, double b, double x);

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

// 3F2(-n, b, c; d, e; 1), terminating.
cplx hyp3f2_unit(int n, cplx b, cplx c, cplx d, cplx e);

// Hahn polynomial h_n^{(alpha,beta)}(x, N).
cplx hahn(int n, cplx alpha, cplx beta, cplx x, cplx N);

}  // namespace hypersint
