#pragma once

#include <ostream>
#include <vector>

#include "nilmprof/device_set.hpp"
#include "nilmprof/information.hpp"
#include "nilmprof/state_space.hpp"

namespace nilmprof::cli {

enum class Format { text, json, csv };

void render_list(std::ostream& out, Format format);
void render_info(std::ostream& out, const DeviceSet& set, Format format);
void render_report(std::ostream& out, const InfoReport& report, Format format);
void render_occupation(std::ostream& out, const OccupationHistogram& hist, Format format);
void render_sweep(std::ostream& out, const std::vector<SweepRow>& rows, Format format);

}  // namespace nilmprof::cli
