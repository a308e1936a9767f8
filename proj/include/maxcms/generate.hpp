#pragma once

#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "maxcms/core.hpp"
#include "maxcms/satgen.hpp"

namespace maxcms {

struct RandomInstanceParams {
  std::size_t objects = 10;
  std::size_t labels = 3;
  int dimension = 1;          // 1: total label order, 2: two-chain realizer
  double noise = 0.2;         // probability a label is replaced by a uniform one
  std::size_t coordinates = 2;
  std::size_t coordinate_range = 6;  // coordinates drawn from 0..range-1
};

/// Objects at random integer points ordered componentwise, labels from a
/// monotone score with a `noise` fraction resampled, weights "p/q" with
/// p in 1..9 and q in 1..4. Serialized with "vectors" object order.
/// Throws InvalidInput on zero objects or labels, or a dimension other
/// than 1 or 2.
nlohmann::json random_instance_document(const RandomInstanceParams& params, std::uint64_t seed);

/// Instance document of the hardness gadget of `f`.
nlohmann::json gadget_document(const Cnf3& f);

}  // namespace maxcms
