#include "patchlift/image_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace patchlift {

namespace {

// Next header token, skipping whitespace and '#' comments. The delimiter
// after the token is left in the stream so the single byte separating the
// maxval field from binary data stays untouched.
std::string next_header_token(std::istream& in) {
  std::string token;
  int ch;
  while ((ch = in.peek()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      in.get();
      continue;
    }
    break;
  }
  while ((ch = in.peek()) != EOF && !std::isspace(ch)) {
    token.push_back(static_cast<char>(in.get()));
  }
  return token;
}

int parse_header_int(std::istream& in, const char* field) {
  const std::string token = next_header_token(in);
  if (token.empty()) {
    throw IoError(std::string("malformed header: missing ") + field);
  }
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || v < 0) {
    throw IoError(std::string("malformed header: bad ") + field);
  }
  return static_cast<int>(v);
}

}  // namespace

std::uint8_t quantize_u8(double v) {
  const double r = std::round(v);
  if (r <= 0.0) {
    return 0;
  }
  if (r >= 255.0) {
    return 255;
  }
  return static_cast<std::uint8_t>(r);
}

Image2D read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  const std::string magic = next_header_token(in);
  if (magic != "P5" && magic != "P2") {
    throw IoError("malformed header: expected P5 or P2 magic");
  }
  const int width = parse_header_int(in, "width");
  const int height = parse_header_int(in, "height");
  const int maxval = parse_header_int(in, "maxval");
  if (width < 1 || height < 1) {
    throw IoError("malformed header: bad dimensions");
  }
  if (maxval != 255) {
    throw IoError("unsupported maxval (must be 255)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<double> data(count);

  if (magic == "P5") {
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) {
      throw IoError("malformed header: missing separator before payload");
    }
    std::vector<unsigned char> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw IoError("truncated payload");
    }
    for (std::size_t k = 0; k < count; ++k) {
      data[k] = raw[k];
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      const std::string token = next_header_token(in);
      if (token.empty()) {
        throw IoError("truncated payload");
      }
      char* end = nullptr;
      const long v = std::strtol(token.c_str(), &end, 10);
      if (end != token.c_str() + token.size() || v < 0 || v > maxval) {
        throw IoError("malformed payload: bad sample value");
      }
      data[k] = static_cast<double>(v);
    }
  }
  return Image2D(height, width, std::move(data));
}

void write_pgm(const Image2D& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
  std::vector<unsigned char> raw(img.data.size());
  for (std::size_t k = 0; k < img.data.size(); ++k) {
    raw[k] = quantize_u8(img.data[k]);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

Signal1D read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::vector<double> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() && in.peek() == EOF) {
      break;  // trailing newline
    }
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    while (end != line.c_str() + line.size() && std::isspace(*end)) {
      ++end;
    }
    if (end != line.c_str() + line.size() || end == line.c_str()) {
      throw IoError("line " + std::to_string(line_no) + ": not a number");
    }
    samples.push_back(v);
  }
  if (samples.empty()) {
    throw IoError("empty signal file");
  }
  return Signal1D(std::move(samples));
}

void write_signal_csv(const Signal1D& sig, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  char buf[48];
  for (double v : sig.samples) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    out << buf << '\n';
  }
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

}  // namespace patchlift
