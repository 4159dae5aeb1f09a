#include "arrowlab/walk.hpp"

namespace arrowlab {

Site step(const ArrowField& field, const Site& x) {
  if (!field.in_region(x))
    throw DomainError("step query outside field region: " + x.to_string());
  return x.stepped(field.arrow_at(x));
}

Trajectory trace(const ArrowField& field, const Site& x, u64 n) {
  Trajectory t;
  t.start = x;
  t.steps.reserve(n);
  Site cur = x;
  for (u64 k = 0; k < n; ++k) {
    if (!field.in_region(cur)) throw TraceExhausted(std::move(t));
    Direction d = field.arrow_at(cur);
    t.steps.push_back(d);
    cur = cur.stepped(d);
  }
  return t;
}

Site trace_visit(const ArrowField& field, const Site& x, u64 n,
                 const std::function<void(u64, const Site&, Direction)>& visit) {
  Site cur = x;
  for (u64 k = 0; k < n; ++k) {
    if (!field.in_region(cur)) {
      Trajectory prefix;
      prefix.start = x;
      throw TraceExhausted(std::move(prefix));
    }
    Direction d = field.arrow_at(cur);
    visit(k, cur, d);
    cur = cur.stepped(d);
  }
  return cur;
}

std::optional<MeetRecord> coalesce_time(const ArrowField& field, const Site& x,
                                        const Site& y, u64 horizon,
                                        u64 agree_check) {
  if (horizon == 0) throw DomainError("coalesce_time: horizon must be positive");
  if (x == y) throw DomainError("coalesce_time: starts must differ");
  if (!field.arrows().is_directed())
    throw DomainError("coalesce_time: lockstep meet detection needs a directed field");

  Site cx = x, cy = y;
  u64 sx = 0, sy = 0;

  while (true) {
    i64 lx = cx.level(), ly = cy.level();
    if (lx == ly && cx == cy) {
      MeetRecord rec{sx, sy, cx, 0};
      // meets are permanent by the single-out-arrow structure; check it
      Site ax = cx, ay = cy;
      for (u64 i = 0; i < agree_check; ++i) {
        ax = ax.stepped(field.arrow_at(ax));
        ay = ay.stepped(field.arrow_at(ay));
        if (!(ax == ay))
          throw DomainError("post-coalescence agreement violated; field is not a function of site");
        rec.agreed_steps = i + 1;
      }
      return rec;
    }
    // advance whichever walk is behind in level; ties advance x
    if (lx <= ly) {
      if (sx == horizon) return std::nullopt;
      cx = cx.stepped(field.arrow_at(cx));
      ++sx;
    } else {
      if (sy == horizon) return std::nullopt;
      cy = cy.stepped(field.arrow_at(cy));
      ++sy;
    }
  }
}

}  // namespace arrowlab
