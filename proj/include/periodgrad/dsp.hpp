// Audio I/O, spectral analysis and feature plumbing.
//
// Conventions used throughout (documented once, here):
//   - Centered framing: frame k is centered on sample k*hop, the signal is
//     reflect-padded by win_length/2 on both ends, K = ceil(N/hop).
//   - Periodic Hann window, zero-padded centered in fft_size.
//   - Magnitude (not power) spectrum into the mel filterbank.
//   - HTK mel scale 2595*log10(1+f/700), area-normalized triangles,
//     fmin = 0, fmax = sample_rate/2 by default.
//   - Natural log with floor 1e-5 for log-mel.
#ifndef PERIODGRAD_DSP_HPP
#define PERIODGRAD_DSP_HPP

#include <complex>
#include <string>
#include <vector>

#include "periodgrad/common.hpp"

namespace periodgrad {

struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  int length() const { return int(samples.size()); }
};

struct DspConfig {
  int sample_rate = 16000;
  int fft_size = 1024;
  int win_length = 400;  // 25 ms
  int hop_length = 80;   // 5 ms
  int n_mels = 80;
  double fmin = 0.0;
  double fmax = 8000.0;

  int n_bins() const { return fft_size / 2 + 1; }
  void validate() const;  // throws ConfigError
};

using SpecC = Grid<std::complex<double>>;

// --- WAV (RIFF PCM16; first channel of multichannel files) ---
Waveform load_wav(const std::string& path);
void save_wav(const Waveform& w, const std::string& path);

// --- FFT (iterative radix-2; a.size() must be a power of two) ---
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// --- Spectral analysis ---
SpecC stft(const Waveform& w, const DspConfig& cfg);
MatD log_mel(const Waveform& w, const DspConfig& cfg);
MatD mel_filterbank(const DspConfig& cfg);  // n_mels x n_bins, exposed for tests
std::vector<double> hann_window(int win_length);

// e_k = sqrt(mean_m exp(mel[k,m])), max-normalized over the utterance,
// clamped below at floor_val.
std::vector<double> frame_energy(const MatD& mel, double floor_val = 0.1);

// --- Frame <-> sample plumbing ---
enum class UpsampleMode { kHold, kLinear };

// K x D -> (K*hop) x D. Hold repeats each frame; linear interpolates between
// frame centers (frame k sits at sample k*hop) with edges held.
MatD upsample_frames(const MatD& seq, int hop, UpsampleMode mode);

// --- Normalization stats (per feature dimension) ---
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // floored at 1e-8 when applied

  int dim() const { return int(mean.size()); }
};

FeatureStats compute_stats(const std::vector<const MatD*>& seqs);
void normalize_inplace(MatD& seq, const FeatureStats& st);
void denormalize_inplace(MatD& seq, const FeatureStats& st);

// Stats persist as a 2 x D matrix (mean row, std row) in the PGF1 format.
void save_stats(const std::string& path, const FeatureStats& st);
FeatureStats load_stats(const std::string& path);

// float <-> double matrix conversion at the file-format boundary
MatF to_f32(const MatD& m);
MatD to_f64(const MatF& m);

}  // namespace periodgrad

#endif  // PERIODGRAD_DSP_HPP
