// The conditional noise-estimation network eps_theta(x_t, c, e, t).
//
// DiffWave-style stack: input 1x1 conv + ReLU, then n_layers gated residual
// blocks of non-causal dilated convolutions (kernel 3, dilation 2^(i mod
// n_layers/n_cycles)), skip-sum output head. Each block's gate/filter
// pre-activations receive four additive projections: the dilated conv itself,
// the acoustic conditioner, the periodic signal e (the PeriodGrad addition,
// absent in priorgrad mode), and the diffusion-step embedding.
//
// The conditioner is projected once per frame and broadcast across the hop:
// a 1x1 projection commutes with hold-upsampling, so this is bit-identical to
// projecting the upsampled sequence sample by sample (forward_upsampled runs
// the same code with hop = 1).
//
// Templated on the scalar type: float for training/inference, double for the
// finite-difference gradient checks.
#ifndef PERIODGRAD_NETWORK_HPP
#define PERIODGRAD_NETWORK_HPP

#include <string>
#include <vector>

#include "periodgrad/common.hpp"

namespace periodgrad {

struct NetworkConfig {
  int n_layers = 10;
  int n_cycles = 2;
  int residual_channels = 32;
  int step_embed_dim = 128;
  int step_hidden_dim = 512;
  int conditioner_dim = 82;  // n_mels + 2
  int periodic_dim = 2;
  bool use_periodic = true;  // false = priorgrad mode

  void validate() const;
  int dilation(int layer) const { return 1 << (layer % (n_layers / n_cycles)); }
  // Measured span of one output sample: 1 + 2 * sum of dilations.
  int receptive_field() const;
};

template <typename T>
struct LayerParams {
  Grid<T> dil_w;   // 2C x 3C, row o holds taps [c*3 .. c*3+2] per input channel
  Grid<T> dil_b;   // 1 x 2C
  Grid<T> cond_w;  // 2C x D
  Grid<T> cond_b;  // 1 x 2C
  Grid<T> per_w;   // 2C x 2 (periodgrad mode only)
  Grid<T> per_b;   // 1 x 2C
  Grid<T> step_w;  // 2C x H
  Grid<T> step_b;  // 1 x 2C
  Grid<T> res_w;   // C x C
  Grid<T> res_b;   // 1 x C
  Grid<T> skip_w;  // C x C
  Grid<T> skip_b;  // 1 x C
};

template <typename T>
struct Params {
  NetworkConfig cfg;
  Grid<T> in_w;  // C x 1
  Grid<T> in_b;  // 1 x C
  Grid<T> fc1_w, fc1_b;  // H x E, 1 x H
  Grid<T> fc2_w, fc2_b;  // H x H, 1 x H
  std::vector<LayerParams<T>> layers;
  Grid<T> head1_w, head1_b;  // C x C, 1 x C
  Grid<T> head2_w, head2_b;  // 1 x C, 1 x 1 (zero-initialized)
};

using ParamsF = Params<float>;
using ParamsD = Params<double>;

// Allocates zeroed tensors with shapes from cfg.
template <typename T>
Params<T> make_params(const NetworkConfig& cfg);

// Conv weights uniform in +-sqrt(1/fan_in), biases zero, final head conv
// zeroed so training starts from eps_hat = 0. Fixed draw order.
ParamsF init_params(const NetworkConfig& cfg, uint64_t seed);

// Named views over every tensor, in serialization order.
template <typename T>
std::vector<std::pair<std::string, Grid<T>*>> tensor_list(Params<T>& p);

int64_t count_params(const NetworkConfig& cfg);

// Sinusoidal embedding: for j < dim/2, emb[j] = sin(t * 10^(4j/(dim/2-1))),
// emb[dim/2 + j] = cos of the same argument.
template <typename T>
std::vector<T> embed_step(double t_tilde, int dim);

// Stored activations for the backward pass. Reusable across calls.
template <typename T>
struct ForwardCache {
  std::vector<Grid<T>> h;        // per-layer inputs, h[0] = relu(in conv), plus final h
  std::vector<Grid<T>> gate_t;   // tanh outputs per layer, C x N
  std::vector<Grid<T>> gate_s;   // sigmoid outputs per layer
  std::vector<Grid<T>> z;        // gated outputs per layer
  std::vector<Grid<T>> cproj;    // conditioner projections per layer, K x 2C
  Grid<T> u;                     // input conv pre-activation, C x N
  Grid<T> skip_acc;              // C x N
  Grid<T> head_a, head_r1, head_b1, head_r2;  // C x N each
  std::vector<T> emb, v1, e1, v2, e2;         // step-embedding MLP intermediates
};

// x: length N; cond_frames: K x D with N = K * hop; e: 2 x N channel-major
// (row 0 sine, row 1 vuv), ignored in priorgrad mode (may be empty).
// Returns eps_hat, length N. Pass a cache to enable backward.
template <typename T>
std::vector<T> forward(const Params<T>& p, const std::vector<T>& x, const Grid<T>& cond_frames,
                       int hop, const Grid<T>& e, double t_tilde,
                       ForwardCache<T>* cache = nullptr);

// Spec-level entry point with a sample-rate conditioner (N x D): every sample
// is its own frame.
template <typename T>
std::vector<T> forward_upsampled(const Params<T>& p, const std::vector<T>& x, const Grid<T>& c_up,
                                 const Grid<T>& e, double t_tilde,
                                 ForwardCache<T>* cache = nullptr);

// Accumulates d<eps_hat, grad_out>/d(param) into grads (caller zeroes).
// Must receive the same inputs as the forward call that filled the cache.
template <typename T>
void backward(const Params<T>& p, const std::vector<T>& x, const Grid<T>& cond_frames, int hop,
              const Grid<T>& e, double t_tilde, const ForwardCache<T>& cache,
              const std::vector<T>& grad_out, Params<T>& grads);

}  // namespace periodgrad

#endif  // PERIODGRAD_NETWORK_HPP
