#include "dic/trace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace dic {

TraceKind parse_trace_kind(std::string_view text) {
  if (text == "uniform") return TraceKind::Uniform;
  if (text == "nested") return TraceKind::Nested;
  if (text == "mixed") return TraceKind::Mixed;
  throw Error(Errc::BadParams, "unknown trace kind '" + std::string(text) + "'");
}

Trace generate(const GenParams& p) {
  if (!(p.delete_prob >= 0.0 && p.delete_prob <= 1.0)) {
    throw Error(Errc::BadParams, "delete_prob must lie in [0, 1]");
  }
  if (p.kind != TraceKind::Mixed && p.delete_prob != 0.0) {
    throw Error(Errc::BadParams, "delete_prob must be 0 for uniform and nested traces");
  }
  if (p.coord_max < 0 || p.max_len < 0) {
    throw Error(Errc::BadParams, "coord_max and max_len must be non-negative");
  }
  const Coord max_len = std::min(p.coord_max, p.max_len > 0 ? p.max_len : std::max<Coord>(1, p.coord_max / 100));

  std::mt19937_64 rng(p.seed);
  auto draw = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); };
  auto bounded = [&] {
    const Coord len = draw(0, max_len);
    const Coord lo = draw(0, p.coord_max - len);
    return std::pair{lo, lo + len};
  };

  Trace trace;
  trace.reserve(p.n);
  IntervalId next_id = 1;
  std::vector<IntervalId> live;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t k = 0; k < p.n; ++k) {
    switch (p.kind) {
      case TraceKind::Uniform: {
        const auto [lo, hi] = bounded();
        trace.push_back(UpdateEvent::insert(next_id++, lo, hi));
        break;
      }
      case TraceKind::Nested:
        trace.push_back(UpdateEvent::insert(next_id++, 0, draw(0, p.coord_max)));
        break;
      case TraceKind::Mixed: {
        if (!live.empty() && coin(rng) < p.delete_prob) {
          const auto pick = static_cast<std::size_t>(draw(0, static_cast<Coord>(live.size()) - 1));
          trace.push_back(UpdateEvent::remove(live[pick]));
          live[pick] = live.back();
          live.pop_back();
        } else {
          const auto [lo, hi] = bounded();
          live.push_back(next_id);
          trace.push_back(UpdateEvent::insert(next_id++, lo, hi));
        }
        break;
      }
    }
  }
  return trace;
}

std::string serialize_event(const UpdateEvent& ev) {
  nlohmann::ordered_json j;
  if (ev.op == UpdateEvent::Op::Insert) {
    j["op"] = "insert";
    j["id"] = ev.id;
    j["l"] = ev.lo;
    j["r"] = ev.hi;
  } else {
    j["op"] = "delete";
    j["id"] = ev.id;
  }
  return j.dump();
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (const UpdateEvent& ev : trace) out << serialize_event(ev) << '\n';
}

std::string serialize(const Trace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

UpdateEvent parse_event(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::TraceInvalid, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::TraceInvalid, "event must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "op" && key != "id" && key != "l" && key != "r") {
      throw Error(Errc::TraceInvalid, "unknown key '" + key + "'");
    }
  }
  if (!j.contains("op") || !j["op"].is_string()) throw Error(Errc::TraceInvalid, "missing string key 'op'");
  if (!j.contains("id") || !j["id"].is_number_unsigned()) {
    throw Error(Errc::TraceInvalid, "missing non-negative integer key 'id'");
  }
  const std::string op = j["op"].get<std::string>();
  const auto id = j["id"].get<IntervalId>();
  if (op == "insert") {
    for (const char* key : {"l", "r"}) {
      if (!j.contains(key) || !j[key].is_number_integer()) {
        throw Error(Errc::TraceInvalid, std::string("insert needs integer key '") + key + "'");
      }
    }
    return UpdateEvent::insert(id, j["l"].get<Coord>(), j["r"].get<Coord>());
  }
  if (op == "delete") {
    if (j.contains("l") || j.contains("r")) throw Error(Errc::TraceInvalid, "delete takes no coordinates");
    return UpdateEvent::remove(id);
  }
  throw Error(Errc::TraceInvalid, "unknown op '" + op + "'");
}

Trace read_trace(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      trace.push_back(parse_event(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(trace);
  return trace;
}

Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_trace(in);
}

void validate(const Trace& trace) {
  std::unordered_set<IntervalId> seen;
  std::unordered_set<IntervalId> live;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const UpdateEvent& ev = trace[k];
    const std::string where = "event " + std::to_string(k + 1) + ": ";
    if (ev.op == UpdateEvent::Op::Insert) {
      if (ev.lo > ev.hi) throw Error(Errc::TraceInvalid, where + "l > r");
      if (!seen.insert(ev.id).second) {
        throw Error(Errc::TraceInvalid, where + "id " + std::to_string(ev.id) + " inserted twice");
      }
      live.insert(ev.id);
    } else if (live.erase(ev.id) == 0) {
      throw Error(Errc::TraceInvalid, where + "delete of id " + std::to_string(ev.id) + " which is not live");
    }
  }
}

bool has_deletes(const Trace& trace) {
  return std::any_of(trace.begin(), trace.end(),
                     [](const UpdateEvent& ev) { return ev.op == UpdateEvent::Op::Delete; });
}

Trace figure_trace() {
  return {UpdateEvent::insert(1, 1, 2), UpdateEvent::insert(2, 8, 9), UpdateEvent::insert(3, 1, 7),
          UpdateEvent::insert(4, 3, 9), UpdateEvent::insert(5, 4, 6), UpdateEvent::insert(6, 4, 6)};
}

}  // namespace dic
