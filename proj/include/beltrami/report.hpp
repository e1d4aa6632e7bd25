#ifndef BELTRAMI_REPORT_HPP
#define BELTRAMI_REPORT_HPP

#include <string>

#include "beltrami/contact.hpp"

namespace beltrami {

// JSON emission with a fixed key order and numbers quantized to 15
// significant digits, so reports diff cleanly between runs.
std::string report_to_json(const ContactReport& rep, int indent = 2);
std::string nodal_to_json(const NodalCurveSet& ns, int indent = 2);
std::string modes_to_json(const TorusTrigField& v, int indent = 2);

double quantize15(double x);

}  // namespace beltrami

#endif
