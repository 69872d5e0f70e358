#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace fbpick {

// One seismic recording: the node payload of the trace graph.
struct Trace {
  std::uint64_t id = 0;
  double src_x = 0.0, src_y = 0.0;
  double rcv_x = 0.0, rcv_y = 0.0;
  std::vector<float> samples;
  double dt = 0.0;                  // seconds per sample
  std::optional<int> fb_sample;     // labeled first-break index, if any
};

struct SurveyMeta {
  std::string name;
  double dt = 0.0;
};

struct Survey {
  std::vector<Trace> traces;
  int length = 0;  // common trace length; all traces must match
  SurveyMeta meta;
};

// Horizontal source-receiver distance.
double offset_of(const Trace& t);

// Throws ValidationError on duplicate ids, ragged lengths, mixed dt, or a
// label outside the trace.
void validate_survey(const Survey& s);

std::unordered_map<std::uint64_t, std::size_t> build_id_index(const Survey& s);

// Per-sample segmentation target: 0 before the first break, 1 from it on.
struct Mask {
  std::vector<std::uint8_t> values;
};

Mask fb_to_mask(int fb_sample, int len);

// First index with p >= 0.5; the trace length acts as the "no pick" sentinel.
int mask_to_fb(std::span<const float> probs);
int mask_to_fb(const Mask& m);

// Divide by max |amplitude|; the all-zero trace is returned unchanged.
std::vector<float> normalize_trace(std::span<const float> samples);

// Linear moveout correction: window each trace at shift(offset) and trim to a
// fixed length so every trace shares one time axis.
struct LmoParams {
  double velocity = 0.0;  // m/s, must be set by the caller
  double t0 = 0.0;        // bulk shift in seconds
  int window_len = 128;
};

int lmo_shift(const Trace& t, const LmoParams& p);

// Total: the shift is clamped at the record start and the window zero-padded
// past the record end. Labels landing outside the window are dropped.
Trace lmo_correct(const Trace& t, const LmoParams& p);

struct PreprocessResult {
  Survey survey;
  int padded_traces = 0;
  int dropped_labels = 0;
};

// LMO trim followed by per-trace normalization.
PreprocessResult preprocess_survey(const Survey& raw, const LmoParams& p);

}  // namespace fbpick
