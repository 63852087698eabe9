#pragma once

#include <optional>
#include <random>

#include "atlas/cochain.hpp"
#include "atlas/error.hpp"

namespace support {

// Kind of the atlas::Error raised by fn, or nullopt if none is raised.
template <class Fn>
std::optional<atlas::ErrorKind> thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const atlas::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Cochain with independent uniform values in (1/den)Z/Z.
inline atlas::Cochain random_cochain(const atlas::GroupPtr& g, std::size_t degree, std::int64_t den,
                                     std::mt19937_64& rng) {
  atlas::Cochain c = atlas::Cochain::zero(g, degree);
  std::uniform_int_distribution<std::int64_t> pick(0, den - 1);
  for (atlas::QZ& v : c.values) v = atlas::QZ(pick(rng), den);
  return c;
}

}  // namespace support
