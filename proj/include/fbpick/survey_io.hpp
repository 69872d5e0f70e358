#pragma once

#include <string>

#include "fbpick/survey.hpp"

namespace fbpick {

enum class SurveyFormat { Csv, Binary };

// CSV layout: header `id,src_x,src_y,rcv_x,rcv_y,dt,fb_sample,s0,...`, one
// trace per row, LF endings, empty fb_sample for unlabeled traces.
// Binary layout: magic FBGS, u32 version, u32 n_traces, u32 length, f32 dt,
// then per trace: u64 id, 4x f32 coords, i32 fb (-1 = absent), f32 samples.
void save_survey(const Survey& s, const std::string& path, SurveyFormat fmt);
Survey load_survey(const std::string& path, SurveyFormat fmt);

// Picks format by file extension: ".bin" or ".fbgs" selects binary.
SurveyFormat survey_format_for(const std::string& path);

}  // namespace fbpick
