// Training loop, checkpoint container, reverse-process synthesizer, and the
// synthetic toy corpus used for end-to-end evaluation.
#ifndef PERIODGRAD_ENGINE_HPP
#define PERIODGRAD_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "periodgrad/diffusion.hpp"
#include "periodgrad/network.hpp"
#include "periodgrad/periodic.hpp"
#include "periodgrad/pitch.hpp"

namespace periodgrad {

enum class Mode { kPriorGrad, kPeriodGrad };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);  // ConfigError on unknown name

struct TrainConfig {
  Mode mode = Mode::kPeriodGrad;
  int diffusion_steps = 50;  // T
  double beta_start = 1e-4;
  double beta_end = 0.05;
  int segment_length = 12000;  // samples, must be a multiple of hop
  int batch_size = 1;
  double learning_rate = 2e-4;
  int total_steps = 20000;
  uint64_t seed = 0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double grad_clip = 1.0;  // global L2 norm; <= 0 disables

  void validate(int hop_length) const;
};

// One training example: a frame-aligned segment with its conditioning.
// e stays empty in priorgrad mode (and is never read).
struct TrainItem {
  std::vector<double> x0;  // segment_length samples
  MatF cond;               // seg_frames x D, normalized features
  MatF e;                  // 2 x segment_length, channel-major (sine, vuv)
  AdaptivePrior prior;     // sigma over the segment
};

struct TrainState {
  TrainConfig cfg;
  NoiseSchedule schedule;  // training schedule, immutable
  ParamsF params;
  ParamsF adam_m, adam_v;  // first/second moments
  int64_t step = 0;        // completed optimizer steps
  ForwardCache<float> cache;
  ParamsF grads;  // scratch, zeroed per step
};

TrainState init_train_state(const NetworkConfig& net, const TrainConfig& cfg);

// One optimizer step over the batch: per item draws t ~ U{1..T} then the
// prior noise (fixed order), diffuses, runs forward/backward of the weighted
// residual, then applies a clipped Adam update. Returns the batch loss.
// Throws on non-finite loss with step/t/max-param diagnostics.
double train_step(TrainState& st, const std::vector<TrainItem>& batch, Rng& rng);

struct Checkpoint {
  DspConfig dsp;
  ParamsF params;          // carries NetworkConfig
  NoiseSchedule schedule;  // training schedule
  FeatureStats stats;
  TrainConfig train;
  int64_t step = 0;
};

// Container: "PGCK", u32 version, u64 manifest length, JSON manifest, then
// concatenated PGF1 tensor blobs at manifest-declared offsets.
void save_checkpoint(const std::string& path, const Checkpoint& ck);
Checkpoint load_checkpoint(const std::string& path);

// Reverse process under the aligned fast schedule. features: K x D raw (as
// extracted); e: K*hop x 2 sample-level periodic signal, empty in priorgrad
// mode (a non-empty e with a priorgrad checkpoint is a mode-mismatch error).
// Output clamped to [-1, 1], length exactly K*hop.
Waveform synthesize(const Checkpoint& ck, const MatD& features, const MatD& e,
                    const NoiseSchedule& infer_sched, Rng& rng);

// --- Corpus ---

struct ManifestEntry {
  std::string wav_path;
  std::string f0_path;
  std::string feature_path;
};

// One line per utterance: wav\tf0\tfeature, paths relative to the manifest.
std::vector<ManifestEntry> load_manifest(const std::string& path);

struct ToyCorpusConfig {
  int n_utts = 200;
  double duration_s = 1.0;
  double f0_min = 100.0;
  double f0_max = 400.0;
  uint64_t seed = 0;
};

// Harmonic utterances with piecewise-linear (in log) F0, a fixed set of
// spectral envelopes, V/UV gaps with short raised-cosine ramps, and a -40 dB
// noise floor. Writes wav/ f0/ subdirectories, declares feat/ paths for the
// extract step, returns the manifest path. Ground-truth F0 goes to the f0
// files; utterance i draws from an independent stream mix_seed(seed, i).
std::string make_toy_corpus(const ToyCorpusConfig& cfg, const DspConfig& dsp,
                            const std::string& out_dir);

// --- Training data assembly ---

// [log-mel | continuous log-F0 | vuv], K x (n_mels + 2).
MatD assemble_features(const DspConfig& dsp, const Waveform& w, const F0Contour& f0);

struct LoadedUtt {
  std::vector<double> x0;  // zero-padded to K*hop
  MatD features;           // raw K x D
  MatF cond;               // normalized
  MatF e;                  // 2 x K*hop (empty in priorgrad mode)
  AdaptivePrior prior;
};

// Loads wav + f0 + features for one manifest entry and prepares the
// network-facing views. Feature file must exist (run extract first).
LoadedUtt prepare_utterance(const DspConfig& dsp, const ManifestEntry& entry,
                            const FeatureStats& stats, Mode mode);

// Random frame-aligned crop; pass the utterance index stream or the training
// rng. Draws exactly one integer from rng.
TrainItem sample_segment(const LoadedUtt& utt, int segment_length, int hop, Rng& rng);

// N x 2 -> channel-major 2 x N float, the network's expected layout.
MatF periodic_to_channels(const MatD& e);

}  // namespace periodgrad

#endif  // PERIODGRAD_ENGINE_HPP
