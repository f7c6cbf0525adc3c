#include "bnba/trace_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnba/format.hpp"

namespace bnba {

namespace {

using nlohmann::json;

std::string bound_token(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return format_value(v);
}

double bound_from_json(const json& j, const char* field) {
  const json& v = j.at(field);
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::runtime_error(std::string("bad bound token in field ") + field);
  }
  return v.get<double>();
}

std::string quote(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string emit_trace(const Trace& trace) {
  std::ostringstream out;
  const RunRecord& run = trace.run;
  out << "{\"kind\":\"run\",\"instance\":" << quote(run.instance_id)
      << ",\"solver\":" << quote(run.solver_id) << ",\"cores\":" << run.cores
      << ",\"seed\":" << run.seed << ",\"time_limit\":" << format_time(run.time_limit)
      << ",\"status\":\"" << to_string(run.status) << "\",\"wall_time\":"
      << format_time(run.wall_time) << ",\"sense\":\"" << to_string(run.sense) << "\"}\n";
  for (const BoundEvent& ev : trace.bounds) {
    out << "{\"kind\":\"bound\",\"t\":" << format_time(ev.t)
        << ",\"primal\":" << bound_token(ev.primal)
        << ",\"dual\":" << bound_token(ev.dual) << "}\n";
  }
  for (const CoreInterval& iv : trace.core_activity) {
    out << "{\"kind\":\"core\",\"id\":" << iv.core_id << ",\"start\":" << format_time(iv.start)
        << ",\"end\":" << format_time(iv.end) << ",\"state\":\"" << to_string(iv.kind)
        << "\"}\n";
  }
  if (trace.work) {
    out << "{\"kind\":\"work\",\"nodes\":" << trace.work->nodes_processed
        << ",\"lps\":" << trace.work->bounding_problems
        << ",\"iters\":" << trace.work->iterations << "}\n";
  }
  return out.str();
}

Trace parse_trace(const std::string& text) {
  Trace trace;
  bool have_run = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "run") {
      if (have_run) throw std::runtime_error("duplicate run header");
      RunRecord& run = trace.run;
      run.instance_id = j.at("instance").get<std::string>();
      run.solver_id = j.at("solver").get<std::string>();
      run.cores = j.at("cores").get<int>();
      run.seed = j.at("seed").get<std::int64_t>();
      run.time_limit = j.at("time_limit").get<double>();
      run.status = status_from_string(j.at("status").get<std::string>());
      run.wall_time = j.at("wall_time").get<double>();
      run.sense = sense_from_string(j.at("sense").get<std::string>());
      have_run = true;
    } else if (kind == "bound") {
      if (!have_run) throw std::runtime_error("bound event before run header");
      trace.bounds.push_back(
          {j.at("t").get<double>(), bound_from_json(j, "primal"), bound_from_json(j, "dual")});
    } else if (kind == "core") {
      if (!have_run) throw std::runtime_error("core interval before run header");
      trace.core_activity.push_back({j.at("id").get<int>(), j.at("start").get<double>(),
                                     j.at("end").get<double>(),
                                     activity_from_string(j.at("state").get<std::string>())});
    } else if (kind == "work") {
      if (!have_run) throw std::runtime_error("work record before run header");
      if (trace.work) throw std::runtime_error("duplicate work record");
      trace.work = WorkCounters{j.at("nodes").get<std::uint64_t>(),
                                j.at("lps").get<std::uint64_t>(),
                                j.at("iters").get<std::uint64_t>()};
    } else {
      throw std::runtime_error("line " + std::to_string(line_no) + ": unknown kind " + kind);
    }
  }
  if (!have_run) throw std::runtime_error("missing run header");
  return trace;
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << emit_trace(trace);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_trace(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace bnba
