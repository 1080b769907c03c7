// Sample-level periodic conditioning signal: sine channel from accumulated
// phase over the hold-upsampled (non-interpolated) frame F0, plus a binary
// V/UV channel.
//
// Phase starts at 0 and is held (not reset) across unvoiced gaps; the sine
// channel itself is zeroed wherever vuv = 0.
#ifndef PERIODGRAD_PERIODIC_HPP
#define PERIODGRAD_PERIODIC_HPP

#include "periodgrad/pitch.hpp"

namespace periodgrad {

// N x 2 matrix (col 0 sine, col 1 vuv); n_samples must equal frames * hop.
// Throws if any voiced f0 reaches sample_rate/2.
MatD generate_periodic(const F0Contour& c, int hop, int n_samples);

// Same signal with voiced f0 scaled by 2^(s/12); vuv pattern unchanged.
MatD regenerate_for_shift(const F0Contour& c, double s, int hop, int n_samples);

}  // namespace periodgrad

#endif  // PERIODGRAD_PERIODIC_HPP
