#pragma once

// Update traces: generation and the JSON Lines wire format.
//
//   {"op":"insert","id":7,"l":-3,"r":12}
//   {"op":"delete","id":7}

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dic/types.hpp"

namespace dic {

struct UpdateEvent {
  enum class Op { Insert, Delete };

  Op op = Op::Insert;
  IntervalId id = 0;
  Coord lo = 0;
  Coord hi = 0;

  static UpdateEvent insert(IntervalId id, Coord lo, Coord hi) { return {Op::Insert, id, lo, hi}; }
  static UpdateEvent remove(IntervalId id) { return {Op::Delete, id, 0, 0}; }

  friend bool operator==(const UpdateEvent&, const UpdateEvent&) = default;
};

using Trace = std::vector<UpdateEvent>;

enum class TraceKind { Uniform, Nested, Mixed };

TraceKind parse_trace_kind(std::string_view text);

struct GenParams {
  TraceKind kind = TraceKind::Uniform;
  std::size_t n = 0;           // number of update events
  double delete_prob = 0.0;    // mixed only
  Coord coord_max = 1'000'000;
  Coord max_len = 0;           // 0 selects max(1, coord_max / 100)
  std::uint64_t seed = 0;
};

/// uniform: n inserts of length-bounded intervals inside [0, coord_max].
/// nested:  n inserts [0, x] sharing the point 0.
/// mixed:   n events; each deletes a random live interval with probability
///          delete_prob (when one exists), otherwise inserts as uniform.
/// Throws BadParams.
Trace generate(const GenParams& params);

std::string serialize_event(const UpdateEvent& ev);
std::string serialize(const Trace& trace);
void write_trace(std::ostream& out, const Trace& trace);

/// Throws TraceInvalid on malformed JSON, missing or unknown keys.
UpdateEvent parse_event(std::string_view line);

/// Parses and validates; blank lines are skipped.  Errors name the line.
Trace read_trace(std::istream& in);
Trace parse_trace(std::string_view text);

/// Ids are unique across inserts; deletes target live ids; lo <= hi.
void validate(const Trace& trace);

[[nodiscard]] bool has_deletes(const Trace& trace);

/// The worked six-interval example: [1,2] [8,9] [1,7] [3,9] [4,6] [4,6], ids 1..6.
Trace figure_trace();

}  // namespace dic
