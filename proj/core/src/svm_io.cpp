#include "spellerscore/svm_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <system_error>

#include "spellerscore/errors.hpp"

namespace spellerscore {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double read_double(std::istream& in, int& line_no) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("hyperplane file truncated at line " + std::to_string(line_no));
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  double v = 0.0;
  auto res = std::from_chars(line.data(), line.data() + line.size(), v);
  if (res.ec != std::errc() || res.ptr != line.data() + line.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + line + "'");
  return v;
}

}  // namespace

void save_hyperplane(const Hyperplane& h, std::ostream& out) {
  out << h.w.size() << '\n';
  out << fmt_double(h.bias_scale) << '\n';
  out << fmt_double(h.b) << '\n';
  for (double v : h.w) out << fmt_double(v) << '\n';
}

void save_hyperplane(const Hyperplane& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  save_hyperplane(h, out);
  if (!out) throw DataError("write failed for " + path.string());
}

Hyperplane load_hyperplane(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty hyperplane file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t dim = 0;
  auto res = std::from_chars(line.data(), line.data() + line.size(), dim);
  if (res.ec != std::errc() || res.ptr != line.data() + line.size())
    throw ParseError("line 1: bad dimension '" + line + "'");

  Hyperplane h;
  h.bias_scale = read_double(in, line_no);
  h.b = read_double(in, line_no);
  h.w.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) h.w.push_back(read_double(in, line_no));
  return h;
}

Hyperplane load_hyperplane(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return load_hyperplane(in);
}

}  // namespace spellerscore
