#pragma once

#include "config.hpp"

#include <iosfwd>

namespace vqc::cli {

// Each command writes its result to `out`, diagnostics to `err`, and returns an ExitCode.
int cmd_fusion(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gw(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_smatrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_hierarchy(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dengdu(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace vqc::cli
