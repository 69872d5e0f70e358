#include "fbpick/survey.hpp"

#include <cmath>
#include <unordered_set>

#include "fbpick/errors.hpp"

namespace fbpick {

double offset_of(const Trace& t) {
  const double dx = t.src_x - t.rcv_x;
  const double dy = t.src_y - t.rcv_y;
  return std::sqrt(dx * dx + dy * dy);
}

void validate_survey(const Survey& s) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(s.traces.size());
  for (const Trace& t : s.traces) {
    if (!seen.insert(t.id).second)
      throw ValidationError("duplicate trace id " + std::to_string(t.id));
    if (t.samples.empty())
      throw ValidationError("trace " + std::to_string(t.id) + " has no samples");
    if (int(t.samples.size()) != s.length)
      throw ValidationError("trace " + std::to_string(t.id) + " has length " +
                            std::to_string(t.samples.size()) + ", survey length is " +
                            std::to_string(s.length));
    if (t.dt <= 0.0)
      throw ValidationError("trace " + std::to_string(t.id) + " has dt <= 0");
    if (t.dt != s.meta.dt)
      throw ValidationError("trace " + std::to_string(t.id) +
                            " has a different dt than the survey");
    if (t.fb_sample && (*t.fb_sample < 0 || *t.fb_sample >= int(t.samples.size())))
      throw ValidationError("trace " + std::to_string(t.id) + ": fb_sample " +
                            std::to_string(*t.fb_sample) + " outside trace of length " +
                            std::to_string(t.samples.size()));
  }
}

std::unordered_map<std::uint64_t, std::size_t> build_id_index(const Survey& s) {
  std::unordered_map<std::uint64_t, std::size_t> idx;
  idx.reserve(s.traces.size());
  for (std::size_t i = 0; i < s.traces.size(); ++i) idx.emplace(s.traces[i].id, i);
  return idx;
}

Mask fb_to_mask(int fb_sample, int len) {
  if (fb_sample < 0 || fb_sample > len)
    throw ValidationError("fb_sample " + std::to_string(fb_sample) +
                          " outside [0, " + std::to_string(len) + "]");
  Mask m;
  m.values.resize(std::size_t(len));
  for (int i = 0; i < len; ++i) m.values[std::size_t(i)] = i >= fb_sample ? 1 : 0;
  return m;
}

int mask_to_fb(std::span<const float> probs) {
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (probs[i] >= 0.5f) return int(i);
  return int(probs.size());
}

int mask_to_fb(const Mask& m) {
  for (std::size_t i = 0; i < m.values.size(); ++i)
    if (m.values[i]) return int(i);
  return int(m.values.size());
}

std::vector<float> normalize_trace(std::span<const float> samples) {
  float peak = 0.0f;
  for (float s : samples) peak = std::max(peak, std::abs(s));
  std::vector<float> out(samples.begin(), samples.end());
  if (peak == 0.0f) return out;
  for (float& s : out) s /= peak;
  return out;
}

int lmo_shift(const Trace& t, const LmoParams& p) {
  const double shift = (p.t0 + offset_of(t) / p.velocity) / t.dt;
  return int(std::lround(shift));
}

Trace lmo_correct(const Trace& t, const LmoParams& p) {
  if (p.velocity <= 0.0) throw ValidationError("lmo velocity must be > 0");
  if (p.window_len < 8) throw ValidationError("lmo window_len must be >= 8");

  const int len = int(t.samples.size());
  const int shift = std::max(0, lmo_shift(t, p));

  Trace out = t;
  out.samples.assign(std::size_t(p.window_len), 0.0f);
  const int avail = std::max(0, std::min(len - shift, p.window_len));
  for (int i = 0; i < avail; ++i) out.samples[std::size_t(i)] = t.samples[std::size_t(shift + i)];

  out.fb_sample.reset();
  if (t.fb_sample) {
    const int fb = *t.fb_sample - shift;
    if (fb >= 0 && fb < p.window_len) out.fb_sample = fb;
  }
  return out;
}

PreprocessResult preprocess_survey(const Survey& raw, const LmoParams& p) {
  validate_survey(raw);
  PreprocessResult r;
  r.survey.meta = raw.meta;
  r.survey.length = p.window_len;
  r.survey.traces.reserve(raw.traces.size());
  for (const Trace& t : raw.traces) {
    const int shift = std::max(0, lmo_shift(t, p));
    if (shift + p.window_len > int(t.samples.size())) ++r.padded_traces;
    Trace w = lmo_correct(t, p);
    if (t.fb_sample && !w.fb_sample) ++r.dropped_labels;
    w.samples = normalize_trace(w.samples);
    r.survey.traces.push_back(std::move(w));
  }
  return r;
}

}  // namespace fbpick
