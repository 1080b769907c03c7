// F0 extraction (YIN-style), continuous log-F0 and semitone shifting.
#ifndef PERIODGRAD_PITCH_HPP
#define PERIODGRAD_PITCH_HPP

#include <vector>

#include "periodgrad/dsp.hpp"

namespace periodgrad {

struct F0Contour {
  std::vector<double> f0;   // Hz, 0 on unvoiced frames
  std::vector<double> vuv;  // {0,1}
  int hop_length = 0;
  int sample_rate = 0;

  int frames() const { return int(f0.size()); }
};

struct ContinuousLogF0 {
  std::vector<double> lf0;  // natural log Hz, gaps interpolated
  std::vector<double> vuv;  // original voicing decisions

  int frames() const { return int(lf0.size()); }
};

// Frame-synchronous (hop-aligned, K = ceil(N/hop)) difference-function pitch
// detection: CMNDF with threshold 0.15, parabolic interpolation of the lag
// minimum, unvoiced where no lag clears the threshold or frame energy is
// below -60 dBFS. A waveform shorter than two periods of f0_min comes back
// all-unvoiced.
F0Contour extract_f0(const Waveform& w, double f0_min, double f0_max, int hop_length);

// Voiced frames keep ln f0; unvoiced gaps are linearly interpolated between
// the nearest voiced neighbors, leading/trailing gaps held. Throws if the
// contour has no voiced frame.
ContinuousLogF0 to_continuous_log_f0(const F0Contour& c);

// Adds s * ln(2)/12 to every value; vuv untouched. s in [-24, 24].
ContinuousLogF0 shift_semitones(const ContinuousLogF0& lf0, double s);

// F0 files persist as PGF1 with cols = 2 (f0 Hz, vuv).
void save_f0(const std::string& path, const F0Contour& c);
F0Contour load_f0(const std::string& path, int hop_length, int sample_rate);

}  // namespace periodgrad

#endif  // PERIODGRAD_PITCH_HPP
