#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hob {

enum class Errc {
  InvalidArgument,
  DegenerateGeometry,
  Unsupported,
  CapExceeded,
  EmptyLayer,
  LayerOutOfRange,
  AmbiguousSupport,
  InsideTable,
  ImageOutsideAtlas,
  CenterMismatch,
  NotCyclic,
  InvalidLabel,
  Overflow,
  Parse,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  // Orbit index at which a web point was hit, when the error came from an
  // orbit computation.
  std::optional<long> iterate;

 private:
  Errc code_;
};

}  // namespace hob
