#pragma once

// Seeded generators for the example measures: constant arrows, iid arrows,
// the two-point periodic system, the rank-1 product field (see cutstack.hpp)
// and the 3-d plane product. A FieldSpec is the flat key=value description
// embedded in experiment configs; building a field from an identical spec
// yields bit-identical samples.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "arrowlab/field.hpp"

namespace arrowlab {

struct FieldSpec {
  // one of: constant, iid, periodic2, cutstack-product, plane-product-z3
  std::string kind;
  double p = 0.5;           // iid
  int phase = 0;            // periodic2
  u64 seed = 1;
  char constant_code = 'E';                   // constant
  std::vector<u64> n_cuts, m_cuts;            // cutstack-product (empty = defaults)
  std::shared_ptr<FieldSpec> inner;           // plane-product-z3

  std::string serialize(const std::string& prefix = "") const;
  static FieldSpec parse(const std::map<std::string, std::string>& kv,
                         const std::string& prefix = "");
};

FieldPtr make_constant(int dim, Direction d);
FieldPtr make_iid(double p, u64 seed);
FieldPtr make_periodic2(int phase);

// d=3 field over A={e1,e2}: plane z=c carries an independent copy of the
// inner 2-d spec with seed derive_seed(seed, u64(c)).
FieldPtr make_plane_product_z3(const FieldSpec& inner, u64 seed);

// Factory from a spec (dispatches to this module and to cutstack).
FieldPtr make_field(const FieldSpec& spec);

}  // namespace arrowlab
