#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "proxima/errors.hpp"
#include "proxima/instance.hpp"

namespace proxima::cli {

/// Malformed instance file. The message names the line/column for syntax
/// errors and the JSON pointer of the offending field otherwise.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Instance file schema:
///
///   {
///     "metric": {"kind": "euclidean", "dimension": n}
///             | {"kind": "explicit-matrix", "matrix": [[...], ...]},
///     "A": [[x, ...], ...] | [i, ...],   coordinates or element indices
///     "B": same as A,
///     "T": [j0, j1, ...],                position in B of T(A[i])
///     "tolerances": {"eps_prox": e, "tol": t},   optional
///     "alpha": a                         optional declared constant
///   }
///
/// "dimension" may be omitted and is then taken from the first point.
/// Missing tolerances default to the metric's proximity tolerance and 1e-9.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);

/// Canonical form: fixed key order, two-space indentation, shortest
/// round-trip formatting of reals. parse_instance(to_canonical(i)) == i.
std::string to_canonical(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace proxima::cli
