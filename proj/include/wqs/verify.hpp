#pragma once

// Per-q verification suite: runs every structural check against its expected
// value and assembles a Report. Used by the CLI and by the acceptance tests.

#include "wqs/report.hpp"

namespace wqs {
namespace verify {

struct Options {
  int fmax = 3;
  int threads = 1;
};

report::Report run(int q, const Options& opts = {});

std::string timestamp_utc();

}  // namespace verify
}  // namespace wqs
