#pragma once

// Walk semantics on top of an arrow field: single steps, horizon-bounded
// traces, and meet detection for directed fields.

#include <functional>
#include <optional>

#include "arrowlab/field.hpp"

namespace arrowlab {

// Thrown when a trace runs off the field's queryable region; carries the
// completed prefix.
class TraceExhausted : public std::runtime_error {
 public:
  explicit TraceExhausted(Trajectory prefix)
      : std::runtime_error("trace left the queryable region"),
        prefix(std::move(prefix)) {}
  Trajectory prefix;
};

// x + alpha(x).
Site step(const ArrowField& field, const Site& x);

// Walk n arrows from x. Throws TraceExhausted if the region runs out.
Trajectory trace(const ArrowField& field, const Site& x, u64 n);

// Streaming variant for long orbits: visit(k, site_before, dir) per step.
// Returns the final site.
Site trace_visit(const ArrowField& field, const Site& x, u64 n,
                 const std::function<void(u64, const Site&, Direction)>& visit);

struct MeetRecord {
  u64 steps_x = 0;       // s with X_x(s) = meet
  u64 steps_y = 0;       // t with X_y(t) = meet
  Site site;             // the meeting site
  u64 agreed_steps = 0;  // post-meet steps checked for agreement
};

// Least (s,t) with X_x(s) == X_y(t), both bounded by horizon; advances the
// two walks in lockstep by anti-diagonal level (directed fields only), so it
// runs in O(horizon) time and O(1) memory. After a meet the two
// continuations are checked to agree for up to `agree_check` further steps.
std::optional<MeetRecord> coalesce_time(const ArrowField& field, const Site& x,
                                        const Site& y, u64 horizon,
                                        u64 agree_check = 100);

}  // namespace arrowlab
