#ifndef FIBERBOUND_SCHEME_FILE_HPP
#define FIBERBOUND_SCHEME_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberbound/groebner.hpp"

namespace fiberbound {

/// Line-oriented scheme description:
///
///   # comment
///   field: QQ            (or: Fp 32003)
///   vars: x y z
///   order: grevlex       (optional)
///   dim: 1               (optional, declared dimension)
///   ideal:
///     x^3 + y^3 + z^3
///     x*y
///
/// Every error is a ParseError carrying the 1-based line and column.
struct SchemeFile {
  RingPtr ring;
  bool order_declared = false;
  std::optional<std::size_t> dim;
  std::vector<Poly> generators;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// default_order applies when the text has no `order:` line.
SchemeFile parse_scheme_file(std::string_view text, MonomialOrder default_order = MonomialOrder::grevlex);

/// Reads and parses a file; an unreadable file is an InvalidArgument.
SchemeFile load_scheme_file(const std::filesystem::path& path, MonomialOrder default_order = MonomialOrder::grevlex);

}  // namespace fiberbound

#endif  // FIBERBOUND_SCHEME_FILE_HPP
