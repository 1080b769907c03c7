// Closed-form DDPM machinery: schedules, forward diffusion, reverse step,
// adaptive prior, losses, fast-schedule alignment. Everything here is double
// precision; the network may run single precision and converts at its edge.
#ifndef PERIODGRAD_DIFFUSION_HPP
#define PERIODGRAD_DIFFUSION_HPP

#include <vector>

#include "periodgrad/dsp.hpp"

namespace periodgrad {

struct NoiseSchedule {
  std::vector<double> betas;
  std::vector<double> alphas;      // 1 - beta
  std::vector<double> alpha_bars;  // running product of alphas

  int steps() const { return int(betas.size()); }
  // 1-based accessors matching the t = 1..T convention; alpha_bar(0) = 1.
  double beta(int t) const { return betas[t - 1]; }
  double alpha(int t) const { return alphas[t - 1]; }
  double alpha_bar(int t) const { return t == 0 ? 1.0 : alpha_bars[t - 1]; }
};

// beta_t = beta_start + (t-1) * (beta_end - beta_start) / (T-1)
NoiseSchedule linear_schedule(int T, double beta_start, double beta_end);

// The fixed 12-step inference beta list.
NoiseSchedule inference_schedule();

struct AdaptivePrior {
  std::vector<double> sigma;  // per-sample std, in [floor, 1]

  int length() const { return int(sigma.size()); }
};

// sigma = linear-interp upsampling of the normalized frame energy of the
// log-mel block to n_samples, clamped to [floor_val, 1].
AdaptivePrior compute_prior(const MatD& mel, int hop, int n_samples, double floor_val = 0.1);

// eps = sigma * z, z iid standard normal (pinned draw order).
std::vector<double> sample_prior_noise(const AdaptivePrior& prior, Rng& rng);

// x_t = sqrt(abar_t) * x0 + sqrt(1 - abar_t) * eps
std::vector<double> forward_diffuse(const std::vector<double>& x0, int t,
                                    const std::vector<double>& eps, const NoiseSchedule& sched);

// mu = (x_t - (beta_t / sqrt(1 - abar_t)) * eps_hat) / sqrt(alpha_t)
// gamma_t = ((1 - abar_{t-1}) / (1 - abar_t)) * beta_t   (gamma_1 = 0)
// x_{t-1} = mu + sqrt(gamma_t) * (sigma * z), noise skipped at t=1 or when
// deterministic (then the rng is not drawn from at all).
std::vector<double> reverse_step(const std::vector<double>& x_t,
                                 const std::vector<double>& eps_hat, int t,
                                 const NoiseSchedule& sched, const AdaptivePrior& prior,
                                 Rng& rng, bool deterministic);

// mean((eps - eps_hat)^2)
double loss_simple(const std::vector<double>& eps, const std::vector<double>& eps_hat);

// mean((eps - eps_hat)^2 / sigma^2)
double loss_weighted(const std::vector<double>& eps, const std::vector<double>& eps_hat,
                     const AdaptivePrior& prior);

struct AlignedStep {
  double t_tilde;    // continuous training-step coordinate in [0, T]
  double beta;       // inference beta for this step
  double alpha_bar;  // inference alpha_bar for this step
};

// Maps each inference step onto the training-step axis by interpolating in
// sqrt(alpha_bar): t_tilde = t + (sqrt(ab_t) - sqrt(ab_s)) / (sqrt(ab_t) - sqrt(ab_{t+1}))
// with ab_0 = 1. Throws if an inference alpha_bar falls outside the training range.
std::vector<AlignedStep> align_fast_schedule(const NoiseSchedule& train,
                                             const NoiseSchedule& infer);

}  // namespace periodgrad

#endif  // PERIODGRAD_DIFFUSION_HPP
