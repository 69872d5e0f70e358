#include "fbpick/survey_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_set>

#include "fbpick/errors.hpp"
#include "fbpick/io_util.hpp"

namespace fbpick {

namespace {

constexpr char kSurveyMagic[4] = {'F', 'B', 'G', 'S'};

std::string fmt_double(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string fmt_float(float v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double parse_double(std::string_view tok, std::size_t line, const char* field) {
  double v = 0.0;
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + field + " value '" + std::string(tok) + "'", line);
  return v;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line, const char* field) {
  std::uint64_t v = 0;
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + field + " value '" + std::string(tok) + "'", line);
  return v;
}

void save_csv(const Survey& s, const std::string& path) {
  std::ofstream os = open_output(path, /*binary=*/true);  // binary keeps LF on all platforms
  os << "id,src_x,src_y,rcv_x,rcv_y,dt,fb_sample";
  for (int i = 0; i < s.length; ++i) os << ",s" << i;
  os << "\n";
  for (const Trace& t : s.traces) {
    os << t.id << ',' << fmt_double(t.src_x) << ',' << fmt_double(t.src_y) << ','
       << fmt_double(t.rcv_x) << ',' << fmt_double(t.rcv_y) << ',' << fmt_double(t.dt) << ',';
    if (t.fb_sample) os << *t.fb_sample;
    for (float v : t.samples) os << ',' << fmt_float(v);
    os << "\n";
  }
}

Survey load_csv(const std::string& path) {
  std::ifstream is = open_input(path, /*binary=*/true);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

  Survey s;
  std::size_t pos = 0, line_no = 0;
  int n_samples = -1;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(&text[pos], eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    auto tok = split(line, ',');
    if (line_no == 1) {
      static const char* kFixed[7] = {"id",  "src_x", "src_y",    "rcv_x",
                                      "rcv_y", "dt",  "fb_sample"};
      if (tok.size() < 8) throw ParseError("header too short", line_no);
      for (int i = 0; i < 7; ++i)
        if (tok[std::size_t(i)] != kFixed[i])
          throw ParseError("unexpected header column '" + std::string(tok[std::size_t(i)]) + "'",
                           line_no);
      n_samples = int(tok.size()) - 7;
      for (int i = 0; i < n_samples; ++i)
        if (tok[std::size_t(7 + i)] != "s" + std::to_string(i))
          throw ParseError("unexpected sample column '" + std::string(tok[std::size_t(7 + i)]) + "'",
                           line_no);
      continue;
    }
    if (int(tok.size()) != 7 + n_samples)
      throw ParseError("expected " + std::to_string(7 + n_samples) + " fields, got " +
                       std::to_string(tok.size()), line_no);

    Trace t;
    t.id = parse_u64(tok[0], line_no, "id");
    t.src_x = parse_double(tok[1], line_no, "src_x");
    t.src_y = parse_double(tok[2], line_no, "src_y");
    t.rcv_x = parse_double(tok[3], line_no, "rcv_x");
    t.rcv_y = parse_double(tok[4], line_no, "rcv_y");
    t.dt = parse_double(tok[5], line_no, "dt");
    if (!tok[6].empty()) t.fb_sample = int(parse_u64(tok[6], line_no, "fb_sample"));
    t.samples.resize(std::size_t(n_samples));
    for (int i = 0; i < n_samples; ++i)
      t.samples[std::size_t(i)] = float(parse_double(tok[std::size_t(7 + i)], line_no, "sample"));
    s.traces.push_back(std::move(t));
  }
  if (n_samples < 0) throw ValidationError(path + ": empty survey file");
  s.length = n_samples;
  s.meta.dt = s.traces.empty() ? 0.0 : s.traces.front().dt;
  s.meta.name = path;
  validate_survey(s);
  return s;
}

void save_binary(const Survey& s, const std::string& path) {
  std::ofstream os = open_output(path, true);
  write_magic(os, kSurveyMagic);
  write_u32(os, 1);
  write_u32(os, std::uint32_t(s.traces.size()));
  write_u32(os, std::uint32_t(s.length));
  write_f32(os, float(s.meta.dt));
  for (const Trace& t : s.traces) {
    write_u64(os, t.id);
    write_f32(os, float(t.src_x));
    write_f32(os, float(t.src_y));
    write_f32(os, float(t.rcv_x));
    write_f32(os, float(t.rcv_y));
    write_i32(os, t.fb_sample ? *t.fb_sample : -1);
    for (float v : t.samples) write_f32(os, v);
  }
}

Survey load_binary(const std::string& path) {
  std::ifstream is = open_input(path, true);
  expect_magic(is, kSurveyMagic, path);
  const std::uint32_t version = read_u32(is);
  if (version != 1)
    throw ValidationError(path + ": unsupported survey version " + std::to_string(version));
  const std::uint32_t n = read_u32(is);
  const std::uint32_t len = read_u32(is);
  const float dt = read_f32(is);

  Survey s;
  s.length = int(len);
  s.meta.dt = double(dt);
  s.meta.name = path;
  s.traces.resize(n);
  for (Trace& t : s.traces) {
    t.id = read_u64(is);
    t.src_x = double(read_f32(is));
    t.src_y = double(read_f32(is));
    t.rcv_x = double(read_f32(is));
    t.rcv_y = double(read_f32(is));
    const std::int32_t fb = read_i32(is);
    if (fb >= 0) t.fb_sample = int(fb);
    t.dt = double(dt);
    t.samples.resize(len);
    for (float& v : t.samples) v = read_f32(is);
  }
  if (!is) throw ValidationError(path + ": truncated survey file");
  validate_survey(s);
  return s;
}

}  // namespace

void save_survey(const Survey& s, const std::string& path, SurveyFormat fmt) {
  if (fmt == SurveyFormat::Csv)
    save_csv(s, path);
  else
    save_binary(s, path);
}

Survey load_survey(const std::string& path, SurveyFormat fmt) {
  return fmt == SurveyFormat::Csv ? load_csv(path) : load_binary(path);
}

SurveyFormat survey_format_for(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = path.substr(dot);
    if (ext == ".bin" || ext == ".fbgs") return SurveyFormat::Binary;
  }
  return SurveyFormat::Csv;
}

}  // namespace fbpick
