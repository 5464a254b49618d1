#include "dsnn/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace dsnn {

namespace {

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

// Trailing run of digits in the stem, or -1.
long long frame_number(const std::filesystem::path& p) {
  const std::string stem = p.stem().string();
  std::size_t end = stem.size();
  std::size_t begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(stem[begin - 1]))) --begin;
  if (begin == end) return -1;
  return std::stoll(stem.substr(begin, end - begin));
}

}  // namespace

void write_pgm(const std::filesystem::path& path, const Field& gray) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open '" + path.string() + "' for writing");
  out << "P5\n" << gray.cols() << " " << gray.rows() << "\n255\n";
  std::vector<unsigned char> bytes(gray.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const double v = std::clamp(std::round(gray.values()[i]), 0.0, 255.0);
    bytes[i] = static_cast<unsigned char>(v);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("pgm: short write to '" + path.string() + "'");
}

Field read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open '" + path.string() + "'");

  const std::string magic = next_token(in);
  if (magic != "P5") {
    if (magic == "P2")
      throw std::runtime_error("pgm: '" + path.string() + "': binary PGM required (got ASCII P2)");
    throw std::runtime_error("pgm: '" + path.string() + "': not a binary PGM (bad magic '" +
                             magic + "')");
  }
  const int cols = std::stoi(next_token(in));
  const int rows = std::stoi(next_token(in));
  const int maxval = std::stoi(next_token(in));
  if (cols <= 0 || rows <= 0)
    throw std::runtime_error("pgm: '" + path.string() + "': bad dimensions");
  if (maxval != 255)
    throw std::runtime_error("pgm: '" + path.string() + "': maxval must be 255, got " +
                             std::to_string(maxval));

  std::vector<unsigned char> bytes(static_cast<std::size_t>(rows) * cols);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
    throw std::runtime_error("pgm: '" + path.string() + "': truncated pixel data");

  Field f(rows, cols);
  for (std::size_t i = 0; i < bytes.size(); ++i) f.values()[i] = bytes[i];
  return f;
}

PgmSequence::PgmSequence(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("frames: '" + dir.string() + "' is not a directory");

  std::vector<std::pair<long long, std::filesystem::path>> numbered;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".pgm") continue;
    const long long n = frame_number(entry.path());
    if (n < 0)
      throw std::runtime_error("frames: '" + entry.path().string() +
                               "' has no frame number in its name");
    numbered.emplace_back(n, entry.path());
  }
  std::sort(numbered.begin(), numbered.end());
  for (std::size_t i = 0; i < numbered.size(); ++i) {
    if (i > 0 && numbered[i].first != numbered[i - 1].first + 1)
      throw std::runtime_error("frames: missing frame index " +
                               std::to_string(numbered[i - 1].first + 1) + " in '" +
                               dir.string() + "'");
    files_.push_back(numbered[i].second);
  }
  if (!files_.empty()) {
    const Field first = read_pgm(files_[0]);
    rows_ = first.rows();
    cols_ = first.cols();
  }
}

std::optional<LuminanceFrame> PgmSequence::next() {
  if (pos_ >= files_.size()) return std::nullopt;
  const std::size_t i = pos_++;
  Field f = read_pgm(files_[i]);
  if (f.rows() != rows_ || f.cols() != cols_) {
    throw std::runtime_error("frames: frame " + std::to_string(i) + " ('" +
                             files_[i].string() + "') is " + std::to_string(f.cols()) + "x" +
                             std::to_string(f.rows()) + ", expected " + std::to_string(cols_) +
                             "x" + std::to_string(rows_));
  }
  return LuminanceFrame{std::move(f), static_cast<std::int64_t>(i)};
}

}  // namespace dsnn
