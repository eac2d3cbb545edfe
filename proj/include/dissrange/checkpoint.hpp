#ifndef DISSRANGE_CHECKPOINT_HPP
#define DISSRANGE_CHECKPOINT_HPP

#include <string>

#include "dissrange/field.hpp"

namespace dissrange {

// Binary checkpoint layout (all multi-byte values little-endian):
//   bytes 0..3   magic "DRNG"
//   bytes 4..7   format version (uint32), currently 1
//   bytes 8..11  N (uint32)
//   bytes 12..15 component count (uint32), always 3
//   then float64: time t, viscosity nu, followed by the full complex
//   coefficient tensor, component-major, row-major within a component
//   (k1 slowest, FFT frequency order), real part before imaginary part.
inline constexpr unsigned kCheckpointVersion = 1;

struct Checkpoint {
    double t = 0.0;
    double nu = 0.0;
    SpectralField field;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::string& path);

} // namespace dissrange

#endif
