// Arithmetic inner loops behind the noise-prediction network.
//
// Every float kernel has a scalar reference implementation and an AVX2 variant;
// the backend is picked once at runtime (cpuid), overridable with
// PERIODGRAD_KERNELS=scalar or set_backend() for equivalence tests.
// The double overloads are scalar only: that path exists for the
// finite-difference gradient checks, where throughput does not matter.
#ifndef PERIODGRAD_KERNELS_HPP
#define PERIODGRAD_KERNELS_HPP

namespace periodgrad::kernels {

enum class Backend { kScalar, kAvx2 };

bool avx2_supported();
Backend active_backend();
void set_backend(Backend b);

// y[i] += a * x[i]
void axpy(int n, float a, const float* x, float* y);
void axpy(int n, double a, const double* x, double* y);

// sum_i x[i] * y[i]
float dot(int n, const float* x, const float* y);
double dot(int n, const double* x, const double* y);

// Fused 3-tap dilated convolution row:
//   y[i] += w[0]*x[i-d] + w[1]*x[i] + w[2]*x[i+d]   (x treated as 0 outside [0,n))
// Requires d >= 1. With w reversed this is also the transposed (gradient) pass.
void conv3_acc(int n, int d, const float w[3], const float* x, float* y);
void conv3_acc(int n, int d, const double w[3], const double* x, double* y);

// Gated activation: t = tanh(a), s = sigmoid(b), z = t*s.
// The float path computes tanh/sigmoid from a polynomial exp shared verbatim
// between the scalar and AVX2 variants; the double path uses libm.
void gated_ts(int n, const float* a, const float* b, float* t, float* s, float* z);
void gated_ts(int n, const double* a, const double* b, double* t, double* s, double* z);

// Backward of the gated activation given stored t, s:
//   ga[i] = gz[i] * s[i] * (1 - t[i]^2)
//   gb[i] = gz[i] * t[i] * s[i] * (1 - s[i])
void gated_bwd(int n, const float* gz, const float* t, const float* s, float* ga, float* gb);
void gated_bwd(int n, const double* gz, const double* t, const double* s, double* ga, double* gb);

}  // namespace periodgrad::kernels

#endif  // PERIODGRAD_KERNELS_HPP
