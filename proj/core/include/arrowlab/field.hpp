#pragma once

// Arrow field interface: a seeded deterministic map Site -> Direction.
// Construction may be expensive; queries must be pure and safe to issue
// concurrently from many readers (repeatable-read contract).

#include <memory>
#include <string>
#include <vector>

#include "arrowlab/lattice.hpp"

namespace arrowlab {

// The declared arrow alphabet A, a subset of {+/-e_1, ..., +/-e_d}.
struct ArrowSet {
  int dim = 2;
  std::vector<Direction> dirs;

  static ArrowSet directed(int dim) {
    ArrowSet a;
    a.dim = dim;
    for (int i = 0; i < dim; ++i) a.dirs.push_back(Direction::e(i));
    return a;
  }
  static ArrowSet single(int dim, Direction d) {
    ArrowSet a;
    a.dim = dim;
    a.dirs.push_back(d);
    return a;
  }

  bool contains(const Direction& d) const {
    for (const auto& x : dirs)
      if (x == d) return true;
    return false;
  }
  // All arrows positive unit vectors (up-right model).
  bool is_directed() const {
    for (const auto& x : dirs)
      if (x.sign < 0) return false;
    return true;
  }
  int symbol_of(const Direction& d) const {
    for (size_t i = 0; i < dirs.size(); ++i)
      if (dirs[i] == d) return static_cast<int>(i);
    throw DomainError("direction not in declared arrow set");
  }
};

class ArrowField {
 public:
  virtual ~ArrowField() = default;

  virtual int dim() const = 0;
  virtual const ArrowSet& arrows() const = 0;
  virtual bool in_region(const Site& s) const { return s.dim == dim(); }
  virtual std::string describe() const = 0;

  // The sampled configuration's arrow at s. Must be repeatable and
  // thread-safe. Implementations check membership in the declared set.
  virtual Direction arrow_at(const Site& s) const = 0;

 protected:
  Direction checked(Direction d) const {
    if (!arrows().contains(d)) throw DomainError("generator produced an arrow outside its declared set");
    return d;
  }
};

using FieldPtr = std::shared_ptr<const ArrowField>;

// View of a field re-based at a site: query(z) = base(origin_shift + z).
class TranslatedField final : public ArrowField {
 public:
  TranslatedField(FieldPtr base, Site new_origin)
      : base_(std::move(base)), origin_(new_origin) {}

  int dim() const override { return base_->dim(); }
  const ArrowSet& arrows() const override { return base_->arrows(); }
  std::string describe() const override {
    return base_->describe() + " rebased at " + origin_.to_string();
  }
  bool in_region(const Site& s) const override {
    return base_->in_region(shift(s));
  }
  Direction arrow_at(const Site& s) const override {
    return base_->arrow_at(shift(s));
  }

 private:
  Site shift(const Site& s) const {
    Site t = s;
    for (int i = 0; i < t.dim; ++i)
      t.c[i] = checked_add(t.c[i], origin_.c[i]);
    return t;
  }
  FieldPtr base_;
  Site origin_;
};

inline FieldPtr rebased(FieldPtr base, const Site& at) {
  return std::make_shared<TranslatedField>(std::move(base), at);
}

// Window-local field backed by a dense grid; also what the ARROWS text
// format parses into and what geodesic trees are returned as.
class GridField final : public ArrowField {
 public:
  GridField(Window window, ArrowSet arrows)
      : window_(window), arrows_(std::move(arrows)),
        cells_(window.volume(), Direction{0, +1}) {}

  int dim() const override { return window_.dim(); }
  const ArrowSet& arrows() const override { return arrows_; }
  const Window& window() const { return window_; }
  bool in_region(const Site& s) const override { return window_.contains(s); }
  std::string describe() const override { return "grid field"; }

  Direction arrow_at(const Site& s) const override {
    if (!window_.contains(s))
      throw DomainError("query outside grid field region: " + s.to_string());
    return cells_[window_.index_of(s)];
  }

  void set(const Site& s, Direction d) { cells_[window_.index_of(s)] = d; }

 private:
  Window window_;
  ArrowSet arrows_;
  std::vector<Direction> cells_;
};

}  // namespace arrowlab
