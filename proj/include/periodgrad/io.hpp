// PGF1 matrix files: 16-byte header {magic "PGF1", u32 rows, u32 cols,
// u32 reserved}, then rows*cols little-endian float32, row-major.
// Used for features, F0 contours, periodic signals, stats, and the tensor
// blobs inside checkpoints.
#ifndef PERIODGRAD_IO_HPP
#define PERIODGRAD_IO_HPP

#include <iosfwd>
#include <string>

#include "periodgrad/common.hpp"

namespace periodgrad {

void write_pgf1(std::ostream& out, const MatF& m);
void write_pgf1(const std::string& path, const MatF& m);

MatF read_pgf1(std::istream& in);
MatF read_pgf1(const std::string& path);

// Whole-file helpers used by determinism checks.
std::string read_file_bytes(const std::string& path);

}  // namespace periodgrad

#endif  // PERIODGRAD_IO_HPP
