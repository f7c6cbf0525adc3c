#pragma once

#include <string>

#include "bnba/trace.hpp"

namespace bnba {

// Line-delimited JSON: one run header line, then one line per bound event,
// core interval, and the optional work record. Times carry six decimals
// (microsecond resolution); objective values use shortest round-trip form;
// infinite bounds appear as the tokens "inf" / "-inf". parse_trace of an
// emitted string reproduces the trace field for field.
std::string emit_trace(const Trace& trace);
Trace parse_trace(const std::string& text);

void write_trace_file(const std::string& path, const Trace& trace);
Trace read_trace_file(const std::string& path);

}  // namespace bnba
