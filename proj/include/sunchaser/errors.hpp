#pragma once

#include <stdexcept>
#include <string>

namespace sunchaser {

enum class Errc {
  order_too_small,
  index_out_of_range,
  degenerate_chord,
  wrong_chord_count,
  crossing_chords,
  not_a_chord,
  not_a_boundary_edge,
  shared_chord,
  size_mismatch,
  not_distance_4,
  distance_3_chord_exists,
  g5_shape_violation,
  not_generalized_sun,
  length_mismatch,
  wrong_residue,
  too_large,
  cap_exceeded,
  retry_limit_exceeded,
  bad_format,
  usage_error,
  internal_contradiction,
};

const char* errc_name(Errc code) noexcept;

/// All library failures carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sunchaser
