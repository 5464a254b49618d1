#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "dsnn/field.hpp"

namespace dsnn {

// Writes an 8-bit binary PGM ("P5", maxval 255). Values are rounded and
// clamped to [0, 255].
void write_pgm(const std::filesystem::path& path, const Field& gray);

// Reads an 8-bit binary PGM. Throws on any other format.
Field read_pgm(const std::filesystem::path& path);

// A directory of numbered .pgm frames, yielded in numeric order. The
// embedded numbers must be consecutive and all frames must share the
// dimensions of the first.
class PgmSequence {
 public:
  explicit PgmSequence(const std::filesystem::path& dir);

  std::size_t size() const { return files_.size(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Next frame in order, or nullopt at the end.
  std::optional<LuminanceFrame> next();

 private:
  std::vector<std::filesystem::path> files_;
  std::size_t pos_ = 0;
  int rows_ = 0, cols_ = 0;
};

}  // namespace dsnn
