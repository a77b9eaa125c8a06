#ifndef FFMOBIUS_REPORT_HPP
#define FFMOBIUS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ffmobius/bounds.hpp"
#include "ffmobius/expsum.hpp"

namespace ffmobius {

// key-value pairs echoed verbatim into every report header
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// shortest round-trip decimal form, locale-independent
std::string format_double(double v);

std::string scan_to_csv(const ScanReport& rep, const ConfigEcho& config);
std::string scan_to_json(const ScanReport& rep, const ConfigEcho& config);

std::string bound_checks_to_csv(const std::vector<BoundCheck>& checks, const ConfigEcho& config);

} // namespace ffmobius

#endif
