// Objective pitch-controllability evaluation plus a multi-resolution
// spectral distance for quality tracking.
#ifndef PERIODGRAD_METRICS_HPP
#define PERIODGRAD_METRICS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "periodgrad/dsp.hpp"
#include "periodgrad/pitch.hpp"

namespace periodgrad {

struct PitchReport {
  double shift = 0.0;      // semitones
  double f0_rmse = 0.0;    // semitones, over co-voiced frames
  double vuv_er = 0.0;     // percent
  int n_eval_frames = 0;   // co-voiced frame count; 0 means f0_rmse is vacuous
  std::string utterance;
};

// RMSE of (12/ln 2) * |ln f0_ref - ln f0_gen| over frames voiced in both
// contours (truncated to the shorter one). 0 with *n_eval_frames = 0 when no
// frame is co-voiced.
double f0_rmse(const F0Contour& ref, const F0Contour& gen, int* n_eval_frames = nullptr);

// 100 * disagreeing-flag frames / total frames (truncated to the shorter).
double vuv_error_rate(const F0Contour& ref, const F0Contour& gen);

// Voiced f0 scaled by 2^(s/12); vuv untouched. s in [-24, 24].
F0Contour shift_contour(const F0Contour& c, double s);

// One test utterance's conditioning package for the sweep.
struct SweepUtt {
  std::string name;
  MatD features;  // K x D raw [mel | continuous log-F0 | vuv]
  F0Contour f0;   // conditioning contour
};

// Produces the waveform for one (utterance, shift) cell. Receives the
// already-shifted features (log-F0 column moved by s), the shifted contour,
// and the regenerated periodic signal e (K*hop x 2).
using SynthFn = std::function<Waveform(const SweepUtt& utt, const MatD& shifted_features,
                                       const F0Contour& shifted_f0, const MatD& e, double shift)>;

// For each shift (in the given order) and each utterance: shift the log-F0
// feature column and the contour, regenerate e, synthesize, extract F0 from
// the output, and report against the SHIFTED reference contour. Aliasing
// errors from the periodic-signal guard propagate.
std::vector<PitchReport> shift_sweep(const std::vector<SweepUtt>& utts, const DspConfig& dsp,
                                     const std::vector<double>& shifts, const SynthFn& synth,
                                     double eval_f0_min, double eval_f0_max);

// Header: shift,f0_rmse_semitones,vuv_er_percent,n_frames,utterance
void write_report_csv(std::ostream& os, const std::vector<PitchReport>& rows);

// Mean over FFT sizes {512, 1024, 2048} of spectral convergence plus
// log-magnitude L1 (signals truncated to the shorter length).
double mr_stft_distance(const Waveform& ref, const Waveform& gen);

}  // namespace periodgrad

#endif  // PERIODGRAD_METRICS_HPP
