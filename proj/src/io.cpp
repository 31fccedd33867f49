#include "qconj/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qconj/encoding.hpp"

namespace qconj {

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ParseError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw ParseError("cannot open for reading: " + path);
  return in;
}

double parse_double(const std::string& field, const std::string& path) {
  try {
    size_t pos = 0;
    double v = std::stod(field, &pos);
    if (pos != field.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("malformed numeric field '" + field + "' in " + path);
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
  }
  return fields;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv_vector(const std::string& path, const std::string& name,
                      const RVec& v) {
  auto out = open_out(path);
  out << name << "\n";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out << format_double(v(i)) << "\n";
}

RVec read_csv_vector(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV: " + path);
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 1)
      throw ParseError("expected one column in " + path);
    values.push_back(parse_double(fields[0], path));
  }
  if (values.empty()) throw ParseError("no data rows in " + path);
  return Eigen::Map<RVec>(values.data(), Eigen::Index(values.size()));
}

void write_csv_grid(const std::string& path, const RVec& row_axis,
                    const RVec& col_axis, const RMat& values) {
  auto out = open_out(path);
  for (Eigen::Index j = 0; j < col_axis.size(); ++j)
    out << "," << format_double(col_axis(j));
  out << "\n";
  for (Eigen::Index i = 0; i < row_axis.size(); ++i) {
    out << format_double(row_axis(i));
    for (Eigen::Index j = 0; j < col_axis.size(); ++j)
      out << "," << format_double(values(i, j));
    out << "\n";
  }
}

void write_csv_label_grid(const std::string& path, const RegionGrid& grid) {
  auto out = open_out(path);
  for (Eigen::Index j = 0; j < grid.fp_axis.size(); ++j)
    out << "," << format_double(grid.fp_axis(j));
  out << "\n";
  for (int i = 0; i < grid.rows; ++i) {
    out << format_double(grid.fpp_axis(i));
    for (int j = 0; j < grid.cols; ++j) out << "," << to_string(grid.at(i, j));
    out << "\n";
  }
}

void write_csv_signal(const std::string& path, const SampledSignal& sig) {
  auto out = open_out(path);
  out << "t,f\n";
  for (Eigen::Index i = 0; i < sig.ts.size(); ++i)
    out << format_double(sig.ts(i)) << "," << format_double(sig.values(i))
        << "\n";
}

SampledSignal read_csv_signal(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV: " + path);
  std::vector<double> ts, fs;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2)
      throw ParseError("expected two columns (t,f) in " + path);
    ts.push_back(parse_double(fields[0], path));
    fs.push_back(parse_double(fields[1], path));
  }
  if (ts.empty()) throw ParseError("no data rows in " + path);
  SampledSignal sig;
  sig.ts = Eigen::Map<RVec>(ts.data(), Eigen::Index(ts.size()));
  sig.values = Eigen::Map<RVec>(fs.data(), Eigen::Index(fs.size()));
  return sig;
}

void write_csv_segmentation(const std::string& path, const SampledSignal& sig,
                            const LabelMap& map, const SignalLimits& lim) {
  auto out = open_out(path);
  out << "t,f,fp,fpp,label,s0,s1,s2,s3,s4,bx,by,bz\n";
  for (Eigen::Index i = 0; i < sig.ts.size(); ++i) {
    const auto& s = map.derivs.samples[size_t(i)];
    BlochVector b = bloch_from_qubit(conjugate_encode(s, lim));
    out << format_double(sig.ts(i)) << "," << format_double(sig.values(i))
        << "," << format_double(s.fp) << "," << format_double(s.fpp) << ","
        << to_string(map.labels[size_t(i)]);
    for (double score : map.scores[size_t(i)]) out << "," << format_double(score);
    out << "," << format_double(b(0)) << "," << format_double(b(1)) << ","
        << format_double(b(2)) << "\n";
  }
}

void write_pgm(const std::string& path, const ImageGray& img) {
  validate_image(img);
  auto out = open_out(path, true);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> row(size_t(img.width));
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double v = std::clamp(img.pixels(y, x), 0.0, 1.0);
      row[size_t(x)] = static_cast<unsigned char>(std::lround(v * 255.0));
    }
    out.write(reinterpret_cast<const char*>(row.data()), img.width);
  }
}

namespace {

int next_pgm_token(std::istream& in) {
  // Skips whitespace and '#' comments.
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string skip;
      std::getline(in, skip);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value = 0;
  if (!(in >> value)) throw ParseError("malformed PGM header");
  return value;
}

}  // namespace

ImageGray read_pgm(const std::string& path) {
  auto in = open_in(path, true);
  std::string magic(2, '\0');
  in.read(magic.data(), 2);
  if (magic != "P5") throw ParseError("not a binary PGM (P5): " + path);
  int width = next_pgm_token(in);
  int height = next_pgm_token(in);
  int maxval = next_pgm_token(in);
  if (maxval != 255)
    throw ParseError("only 8-bit PGM (maxval 255) supported: " + path);
  in.get();  // single whitespace after maxval
  if (width <= 0 || height <= 0) throw ParseError("bad PGM size: " + path);
  ImageGray img;
  img.width = width;
  img.height = height;
  img.pixels.resize(height, width);
  std::vector<unsigned char> row(static_cast<size_t>(width), 0);
  for (int y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), width);
    if (in.gcount() != width) throw ParseError("truncated PGM data: " + path);
    for (int x = 0; x < width; ++x)
      img.pixels(y, x) = row[size_t(x)] / 255.0;
  }
  return img;
}

void write_label_pgm(const std::string& path, const ImageLabelMap& labels) {
  auto out = open_out(path, true);
  out << "P5\n" << labels.width << " " << labels.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(labels.width), 0);
  for (int y = 0; y < labels.height; ++y) {
    for (int x = 0; x < labels.width; ++x)
      row[size_t(x)] =
          static_cast<unsigned char>(51 * static_cast<int>(labels.at(y, x)));
    out.write(reinterpret_cast<const char*>(row.data()), labels.width);
  }
}

}  // namespace qconj
