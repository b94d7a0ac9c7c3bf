#include "spellerscore/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace spellerscore {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, int line_no) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(s) +
                     "'");
  return v;
}

int parse_int(std::string_view s, int line_no) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + std::string(s) +
                     "'");
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void save_dataset(const Dataset& d, std::ostream& out) {
  out << "n_trials=" << d.n_trials << '\n';
  out << "n_iterations=" << d.meta.max_iterations << '\n';
  out << "levels=";
  for (std::size_t i = 0; i < d.meta.levels.size(); ++i) {
    if (i) out << ',';
    out << d.meta.levels[i];
  }
  out << '\n';
  out << "n_flashes=" << d.meta.n_flashes << '\n';
  out << "n_channels=" << d.meta.n_channels << '\n';
  out << "samples_per_channel=" << d.meta.samples_per_channel << '\n';
  out << "soa=" << fmt_double(d.meta.soa_seconds) << '\n';
  out << "n_symbols=" << d.meta.n_symbols << '\n';
  out << "overhead=" << fmt_double(d.meta.overhead_seconds) << '\n';
  out << "split=" << split_name(d.split) << '\n';
  for (const StimulusRecord& rec : d.records) {
    out << rec.trial << ',' << rec.iteration << ',' << rec.level << ',' << rec.flash << ','
        << rec.label;
    for (double v : rec.features) out << ',' << fmt_double(v);
    out << '\n';
  }
  out << "TRUTH\n";
  for (int k = 1; k <= d.n_trials; ++k)
    for (int t = 0; t < d.meta.n_levels(); ++t)
      out << k << ',' << t << ',' << d.truth[k - 1][t] << '\n';
}

void save_dataset(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  save_dataset(d, out);
  if (!out) throw DataError("write failed for " + path.string());
}

Dataset load_dataset(std::istream& in) {
  Dataset d;
  std::map<std::string, std::string> header;
  bool in_truth = false;
  bool header_done = false;
  std::string line;
  int line_no = 0;
  int expect_dim = -1;

  auto require_header = [&](const char* key) -> const std::string& {
    auto it = header.find(key);
    if (it == header.end()) throw ParseError(std::string("missing header key ") + key);
    return it->second;
  };

  auto close_header = [&] {
    if (header_done) return;
    header_done = true;
    d.n_trials = parse_int(require_header("n_trials"), line_no);
    d.meta.max_iterations = parse_int(require_header("n_iterations"), line_no);
    for (auto part : split_csv(require_header("levels")))
      d.meta.levels.emplace_back(part);
    d.meta.n_flashes = parse_int(require_header("n_flashes"), line_no);
    d.meta.n_channels = parse_int(require_header("n_channels"), line_no);
    d.meta.samples_per_channel = parse_int(require_header("samples_per_channel"), line_no);
    d.meta.soa_seconds = parse_double(require_header("soa"), line_no);
    d.meta.n_symbols = parse_int(require_header("n_symbols"), line_no);
    d.meta.overhead_seconds = parse_double(require_header("overhead"), line_no);
    d.meta.flashes_per_iteration = d.meta.n_flashes * d.meta.n_levels();
    d.split = split_from_name(require_header("split"));
    if (d.n_trials < 1) throw ParseError("n_trials must be positive");
    d.truth.assign(d.n_trials, std::vector<int>(d.meta.n_levels(), 0));
    expect_dim = d.meta.feature_dim();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line == "TRUTH") {
      close_header();
      in_truth = true;
      continue;
    }

    std::size_t eq = line.find('=');
    bool is_header = eq != std::string::npos &&
                     line.find(',') > eq;  // `levels=a,b` is a header line too
    if (is_header && !header_done) {
      if (in_truth) throw ParseError("line " + std::to_string(line_no) + ": header after TRUTH");
      header[line.substr(0, eq)] = line.substr(eq + 1);
      continue;
    }

    close_header();
    auto fields = split_csv(line);
    if (in_truth) {
      if (fields.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": truth line needs k,t,flash");
      int k = parse_int(fields[0], line_no);
      int t = parse_int(fields[1], line_no);
      int f = parse_int(fields[2], line_no);
      if (k < 1 || k > d.n_trials || t < 0 || t >= d.meta.n_levels())
        throw ParseError("line " + std::to_string(line_no) + ": truth index out of range");
      d.truth[k - 1][t] = f;
    } else {
      if (fields.size() < 5)
        throw ParseError("line " + std::to_string(line_no) + ": record line too short");
      if (static_cast<int>(fields.size()) - 5 != expect_dim)
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(expect_dim) + " features, got " +
                         std::to_string(fields.size() - 5));
      StimulusRecord rec;
      rec.trial = parse_int(fields[0], line_no);
      rec.iteration = parse_int(fields[1], line_no);
      rec.level = parse_int(fields[2], line_no);
      rec.flash = parse_int(fields[3], line_no);
      rec.label = parse_int(fields[4], line_no);
      rec.features.reserve(expect_dim);
      for (std::size_t i = 5; i < fields.size(); ++i)
        rec.features.push_back(parse_double(fields[i], line_no));
      d.records.push_back(std::move(rec));
    }
  }

  close_header();
  if (!in_truth) throw ParseError("missing TRUTH section");
  d.finalize();
  return d;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return load_dataset(in);
}

}  // namespace spellerscore
